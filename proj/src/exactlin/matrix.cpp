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

#include "simpres/matrix.hpp"

#include <algorithm>

namespace simpres {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), columns_(cols), field_(field) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t j = 0; j < n; ++j) m.columns_[j] = SparseVector::basis(j, field);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVector> columns, Field field) {
  Matrix m;
  m.rows_ = rows;
  m.field_ = field;
  m.columns_ = std::move(columns);
  for (const auto& c : m.columns_) m.check_bounds(c, rows);
  return m;
}

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries,
                             Field field) {
  std::vector<std::vector<SparseVector::Entry>> buckets(cols);
  for (auto& [i, j, x] : entries) {
    if (i >= rows || j >= cols)
      throw ValidationError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    buckets[j].emplace_back(i, std::move(x));
  }
  Matrix m(rows, cols, field);
  for (std::size_t j = 0; j < cols; ++j)
    m.columns_[j] = SparseVector::from_unsorted(std::move(buckets[j]));
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                          Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ValidationError("dense matrix row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.columns_[j].push_back(i, rows[i][j]);
  }
  return m;
}

void Matrix::check_bounds(const SparseVector& v, std::size_t bound) const {
  if (v.support_bound() > bound)
    throw ValidationError("vector index " + std::to_string(v.support_bound() - 1) +
                          " out of range for dimension " + std::to_string(bound));
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVector& c) { return c.empty(); });
}

Scalar Matrix::entry(std::size_t i, std::size_t j) const {
  const Scalar* x = columns_.at(j).find(i);
  return x ? *x : field_.zero();
}

void Matrix::set_entry(std::size_t i, std::size_t j, const Scalar& value) {
  if (i >= rows_ || j >= cols()) throw ValidationError("set_entry out of range");
  std::vector<SparseVector::Entry> e(columns_[j].begin(), columns_[j].end());
  e.erase(std::remove_if(e.begin(), e.end(), [&](const auto& x) { return x.first == i; }),
          e.end());
  e.emplace_back(i, value);
  columns_[j] = SparseVector::from_unsorted(std::move(e));
}

SparseVector Matrix::apply(const SparseVector& v) const {
  check_bounds(v, cols());
  if (v.size() == 1) return columns_[v[0].first].scaled(v[0].second);
  std::vector<SparseVector::Entry> acc;
  for (const auto& [j, x] : v)
    for (const auto& [i, y] : columns_[j]) acc.emplace_back(i, x * y);
  return SparseVector::from_unsorted(std::move(acc));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols() != rhs.rows_)
    throw ValidationError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                          std::to_string(cols()) + " * " + std::to_string(rhs.rows_) + "x" +
                          std::to_string(rhs.cols()));
  Matrix out(rows_, rhs.cols(), field_);
  for (std::size_t j = 0; j < rhs.cols(); ++j) out.columns_[j] = apply(rhs.columns_[j]);
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols())
    throw ValidationError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j].axpy(field_.one(), rhs.columns_[j]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols())
    throw ValidationError("matrix difference shape mismatch");
  Matrix out = *this;
  Scalar minus_one = -field_.one();
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j].axpy(minus_one, rhs.columns_[j]);
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(rows_, cols(), field_);
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j] = columns_[j].scaled(c);
  return out;
}

Matrix Matrix::transposed() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, x] : columns_[j]) rows[i].push_back(j, x);
  return Matrix::from_columns(cols(), std::move(rows), field_);
}

std::vector<SparseVector> Matrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, x] : columns_[j]) rows[i].push_back(j, x);
  return rows;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

}  // namespace simpres
