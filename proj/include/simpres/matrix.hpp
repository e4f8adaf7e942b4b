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

#ifndef SIMPRES_MATRIX_HPP
#define SIMPRES_MATRIX_HPP

#include <cstddef>
#include <tuple>
#include <vector>

#include "simpres/sparse_vector.hpp"

namespace simpres {

/// Sparse matrix stored by columns: column j is the image of basis vector j.
class Matrix {
 public:
  using Triplet = std::tuple<std::size_t, std::size_t, Scalar>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix identity(std::size_t n, Field field);
  static Matrix from_columns(std::size_t rows, std::vector<SparseVector> columns, Field field);
  static Matrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries,
                              Field field);
  /// Dense row-major input; zero entries dropped.
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                           Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Field& field() const { return field_; }
  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVector>& columns() const { return columns_; }
  std::size_t nnz() const;
  bool is_zero() const;

  Scalar entry(std::size_t i, std::size_t j) const;
  /// Replaces one entry (used by fixture construction and fault injection).
  void set_entry(std::size_t i, std::size_t j, const Scalar& value);

  SparseVector apply(const SparseVector& v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  /// Row vectors, i.e. the columns of the transpose.
  std::vector<SparseVector> row_vectors() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_bounds(const SparseVector& v, std::size_t bound) const;

  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
  Field field_;
};

}  // namespace simpres

#endif  // SIMPRES_MATRIX_HPP
