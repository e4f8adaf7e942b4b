/* Copyright (C) 2026 The simpres Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef SIMPRES_SPARSE_VECTOR_HPP
#define SIMPRES_SPARSE_VECTOR_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "simpres/scalar.hpp"

namespace simpres {

/// Coordinate vector stored as (index, value) pairs with strictly increasing
/// indices and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;

  static SparseVector basis(std::size_t index, const Field& f) {
    SparseVector v;
    v.entries_.emplace_back(index, f.one());
    return v;
  }
  /// Sorts, merges duplicate indices and drops zeros.
  static SparseVector from_unsorted(std::vector<Entry> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// nullptr when the coordinate is zero.
  const Scalar* find(std::size_t index) const;
  /// Largest stored index + 1, or 0.
  std::size_t support_bound() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  /// Appends an entry; indices must increase and value must be nonzero.
  void push_back(std::size_t index, Scalar value);

  /// this += c * w
  void axpy(const Scalar& c, const SparseVector& w);
  SparseVector scaled(const Scalar& c) const;
  SparseVector operator-() const;

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend bool operator==(const SparseVector& a, const SparseVector& b) = default;

  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

/// Kronecker product of coordinate vectors: index = ia * dim_b + ib.
SparseVector kron(const SparseVector& a, const SparseVector& b, std::size_t dim_b);

}  // namespace simpres

#endif  // SIMPRES_SPARSE_VECTOR_HPP
