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

#ifndef SIMPRES_LINALG_HPP
#define SIMPRES_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "simpres/matrix.hpp"

namespace simpres {

/// A subspace of k^ambient_dim. Each basis row has coefficient 1 at its
/// pivot column and 0 at every other row's pivot column; rows are ordered by
/// strictly increasing pivot. Coordinates of a member vector are therefore
/// its values at the pivot columns.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, std::vector<SparseVector> basis,
           std::vector<std::size_t> pivots);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the basis, read off at the pivots.
  SparseVector residual(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return residual(v).empty(); }
  /// Coordinates with respect to basis(); only meaningful for members.
  SparseVector coordinates(const SparseVector& v) const;
  /// Position of a pivot column in pivots(), or npos.
  std::size_t pivot_position(std::size_t column) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

enum class PivotRule {
  /// Smallest representation size, then fewest occurrences in other rows,
  /// then lowest column index.
  kSmallestEntry,
  /// Lowest column index (classical reduced row echelon form).
  kLeftmost,
};

/// Incremental Gauss-Jordan elimination. Stored rows are kept fully reduced:
/// every row is zero at every other row's pivot column.
class RowReducer {
 public:
  RowReducer(std::size_t dim, Field field, PivotRule rule = PivotRule::kSmallestEntry);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  /// Returns true when v was independent of the rows added so far.
  bool add(const SparseVector& v);
  /// v reduced modulo the current row space (supported off the pivots).
  SparseVector reduce(const SparseVector& v);
  bool is_pivot(std::size_t column) const { return pivot_row_[column] != kNone; }

  Subspace to_subspace() const;

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  std::size_t choose_pivot(const SparseVector& r) const;

  std::size_t dim_;
  Field field_;
  PivotRule rule_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::uint32_t> pivot_row_;
  std::vector<std::vector<std::uint32_t>> occurrences_;

  // Dense scratch for reduce().
  std::vector<Scalar> work_;
  std::vector<char> touched_flag_;
  std::vector<std::size_t> touched_;
};

/// k^ambient_dim / span(relations) with explicit coordinates.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace relations;
  /// quotient_dim x ambient_dim
  Matrix projection;
  /// ambient_dim x quotient_dim; picks the representative basis vector.
  Matrix section;
  /// Ambient index represented by each quotient basis vector.
  std::vector<std::size_t> representatives;

  std::size_t dim() const { return representatives.size(); }
  SparseVector project(const SparseVector& v) const { return projection.apply(v); }
};

std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}; its dimension is cols(m) - rank(m).
Subspace kernel_basis(const Matrix& m);
/// Vectors orthogonal to every row fed to the reducer, i.e. the solutions of
/// the constraint system those rows describe.
Subspace null_space(const RowReducer& constraints);
/// Constraints stacked as rows; same as kernel_basis.
Subspace solve_linear_constraints(const Matrix& constraints);
Subspace span_of(std::size_t ambient_dim, std::span<const SparseVector> vectors, Field field);

QuotientSpace quotient_by(std::size_t ambient_dim, std::span<const SparseVector> relations,
                          Field field);
/// Builds the quotient from an already-fed reducer (relations streamed in).
QuotientSpace quotient_from(const RowReducer& relations);

}  // namespace simpres

#endif  // SIMPRES_LINALG_HPP
