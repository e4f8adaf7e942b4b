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

#include "simpres/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace simpres {

Subspace::Subspace(std::size_t ambient_dim, std::vector<SparseVector> basis,
                   std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {
  if (basis_.size() != pivots_.size())
    throw ConstructionError("Subspace: basis and pivot counts differ");
  for (std::size_t k = 1; k < pivots_.size(); ++k)
    if (pivots_[k - 1] >= pivots_[k])
      throw ConstructionError("Subspace: pivots must strictly increase");
}

std::size_t Subspace::pivot_position(std::size_t column) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), column);
  if (it == pivots_.end() || *it != column) return npos;
  return static_cast<std::size_t>(it - pivots_.begin());
}

SparseVector Subspace::residual(const SparseVector& v) const {
  std::vector<SparseVector::Entry> acc(v.begin(), v.end());
  for (const auto& [c, x] : v) {
    std::size_t pos = pivot_position(c);
    if (pos == npos) continue;
    for (const auto& [j, y] : basis_[pos]) acc.emplace_back(j, -(x * y));
  }
  return SparseVector::from_unsorted(std::move(acc));
}

SparseVector Subspace::coordinates(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [c, x] : v) {
    std::size_t pos = pivot_position(c);
    if (pos != npos) out.push_back(pos, x);
  }
  return out;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(std::size_t dim, Field field, PivotRule rule)
    : dim_(dim),
      field_(field),
      rule_(rule),
      pivot_row_(dim, kNone),
      occurrences_(dim),
      work_(dim),
      touched_flag_(dim, 0) {}

SparseVector RowReducer::reduce(const SparseVector& v) {
  if (v.support_bound() > dim_)
    throw ValidationError("vector index out of range for dimension " + std::to_string(dim_));
  touched_.clear();
  auto touch = [&](std::size_t j, Scalar x) {
    if (!touched_flag_[j]) {
      touched_flag_[j] = 1;
      work_[j] = std::move(x);
      touched_.push_back(j);
    } else {
      work_[j] += x;
    }
  };
  for (const auto& [c, x] : v) {
    std::uint32_t r = pivot_row_[c];
    if (r == kNone) {
      touch(c, x);
      continue;
    }
    for (const auto& [j, y] : rows_[r])
      if (j != c) touch(j, -(x * y));
  }
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  for (std::size_t j : touched_) {
    touched_flag_[j] = 0;
    if (!work_[j].is_zero()) out.push_back(j, std::move(work_[j]));
  }
  return out;
}

std::size_t RowReducer::choose_pivot(const SparseVector& r) const {
  if (rule_ == PivotRule::kLeftmost) return r[0].first;
  std::size_t best = r[0].first;
  auto key = [&](const SparseVector::Entry& e) {
    return std::make_tuple(e.second.size_hint(), occurrences_[e.first].size(), e.first);
  };
  auto best_key = key(r[0]);
  for (const auto& e : r) {
    auto k = key(e);
    if (k < best_key) {
      best_key = k;
      best = e.first;
    }
  }
  return best;
}

bool RowReducer::add(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  std::size_t c = choose_pivot(r);
  r = r.scaled(r.find(c)->inverse());

  auto id = static_cast<std::uint32_t>(rows_.size());
  std::vector<std::uint32_t> holders = std::move(occurrences_[c]);
  occurrences_[c].clear();
  for (std::uint32_t rid : holders) {
    SparseVector& row = rows_[rid];
    const Scalar* x = row.find(c);
    if (!x) continue;
    Scalar coef = -*x;
    for (const auto& [j, y] : r)
      if (j != c && !row.find(j)) occurrences_[j].push_back(rid);
    row.axpy(coef, r);
  }
  for (const auto& [j, y] : r)
    if (j != c) occurrences_[j].push_back(id);

  rows_.push_back(std::move(r));
  row_pivot_.push_back(c);
  pivot_row_[c] = id;
  return true;
}

Subspace RowReducer::to_subspace() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row_pivot_[a] < row_pivot_[b]; });
  std::vector<SparseVector> basis;
  std::vector<std::size_t> pivots;
  basis.reserve(order.size());
  pivots.reserve(order.size());
  for (std::size_t k : order) {
    basis.push_back(rows_[k]);
    pivots.push_back(row_pivot_[k]);
  }
  return Subspace(dim_, std::move(basis), std::move(pivots));
}

// ---------------------------------------------------------------------------

std::size_t rank(const Matrix& m) {
  // Feed whichever side is shorter; row rank equals column rank.
  if (m.cols() <= m.rows()) {
    RowReducer red(m.rows(), m.field());
    for (const auto& c : m.columns()) red.add(c);
    return red.rank();
  }
  RowReducer red(m.cols(), m.field());
  for (const auto& r : m.row_vectors()) red.add(r);
  return red.rank();
}

Subspace kernel_basis(const Matrix& m) {
  RowReducer red(m.cols(), m.field());
  for (const auto& r : m.row_vectors()) red.add(r);
  return null_space(red);
}

Subspace null_space(const RowReducer& constraints) {
  Subspace rows = constraints.to_subspace();
  const std::size_t cols = constraints.dim();
  const Field& f = constraints.field();

  std::vector<std::vector<SparseVector::Entry>> acc(cols);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : rows.pivots()) is_pivot[p] = 1;
  for (std::size_t k = 0; k < rows.dim(); ++k) {
    std::size_t p = rows.pivots()[k];
    for (const auto& [j, y] : rows.basis()[k])
      if (j != p) acc[j].emplace_back(p, -y);
  }
  std::vector<SparseVector> basis;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    acc[c].emplace_back(c, f.one());
    basis.push_back(SparseVector::from_unsorted(std::move(acc[c])));
    free_cols.push_back(c);
  }
  return Subspace(cols, std::move(basis), std::move(free_cols));
}

Subspace solve_linear_constraints(const Matrix& constraints) { return kernel_basis(constraints); }

Subspace span_of(std::size_t ambient_dim, std::span<const SparseVector> vectors, Field field) {
  RowReducer red(ambient_dim, field);
  for (const auto& v : vectors) red.add(v);
  return red.to_subspace();
}

QuotientSpace quotient_from(const RowReducer& relations) {
  QuotientSpace q;
  q.ambient_dim = relations.dim();
  q.relations = relations.to_subspace();
  const Field& f = relations.field();

  std::vector<std::size_t> qindex(q.ambient_dim, Subspace::npos);
  for (std::size_t j = 0; j < q.ambient_dim; ++j) {
    if (relations.is_pivot(j)) continue;
    qindex[j] = q.representatives.size();
    q.representatives.push_back(j);
  }
  std::vector<SparseVector> proj(q.ambient_dim);
  for (std::size_t j = 0; j < q.ambient_dim; ++j)
    if (qindex[j] != Subspace::npos) proj[j] = SparseVector::basis(qindex[j], f);
  for (std::size_t k = 0; k < q.relations.dim(); ++k) {
    std::size_t p = q.relations.pivots()[k];
    SparseVector col;
    for (const auto& [j, y] : q.relations.basis()[k])
      if (j != p) col.push_back(qindex[j], -y);
    proj[p] = std::move(col);
  }
  q.projection = Matrix::from_columns(q.dim(), std::move(proj), f);

  std::vector<SparseVector> sec;
  sec.reserve(q.dim());
  for (std::size_t j : q.representatives) sec.push_back(SparseVector::basis(j, f));
  q.section = Matrix::from_columns(q.ambient_dim, std::move(sec), f);
  return q;
}

QuotientSpace quotient_by(std::size_t ambient_dim, std::span<const SparseVector> relations,
                          Field field) {
  RowReducer red(ambient_dim, field);
  for (const auto& r : relations) red.add(r);
  return quotient_from(red);
}

}  // namespace simpres
