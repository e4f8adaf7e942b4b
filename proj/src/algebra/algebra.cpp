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

#include "simpres/algebra.hpp"

#include <sstream>

namespace simpres {

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_index(const SparseVector& v, std::size_t dim, const std::string& what) {
  if (v.support_bound() > dim)
    throw ValidationError(what + ": coordinate " + std::to_string(v.support_bound() - 1) +
                          " outside dimension " + std::to_string(dim));
}

}  // namespace

Algebra::Algebra(Field field, std::vector<std::string> labels, SparseVector unit,
                 std::vector<SparseVector> products, std::string name)
    : field_(field),
      labels_(std::move(labels)),
      unit_(std::move(unit)),
      products_(std::move(products)),
      name_(std::move(name)) {
  if (labels_.empty()) throw ValidationError("algebra " + name_ + " has dimension 0");
  if (products_.size() != dim() * dim())
    throw ValidationError("algebra " + name_ + ": expected " + std::to_string(dim() * dim()) +
                          " structure constants, got " + std::to_string(products_.size()));
  check_index(unit_, dim(), "algebra " + name_ + " unit");
  for (const auto& p : products_) check_index(p, dim(), "algebra " + name_ + " product");
}

SparseVector Algebra::multiply(const SparseVector& x, const SparseVector& y) const {
  check_index(x, dim(), "multiply lhs");
  check_index(y, dim(), "multiply rhs");
  if (x.size() == 1 && y.size() == 1)
    return product(x[0].first, y[0].first).scaled(x[0].second * y[0].second);
  std::vector<SparseVector::Entry> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      Scalar c = a * b;
      for (const auto& [k, s] : product(i, j)) acc.emplace_back(k, c * s);
    }
  return SparseVector::from_unsorted(std::move(acc));
}

Report Algebra::validate() const {
  Report r;
  CheckOutcome& assoc = r.family("algebra " + name_ + " associativity");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k) {
        SparseVector lhs = multiply(product(i, j), basis(k));
        SparseVector rhs = multiply(basis(i), product(j, k));
        assoc.expect(lhs == rhs, [&] { return "basis triple " + triple_str(i, j, k); });
      }
  CheckOutcome& unit = r.family("algebra " + name_ + " unit");
  for (std::size_t i = 0; i < dim(); ++i) {
    SparseVector e = basis(i);
    unit.expect(multiply(unit_, e) == e, [&] { return "1*e_" + std::to_string(i); });
    unit.expect(multiply(e, unit_) == e, [&] { return "e_" + std::to_string(i) + "*1"; });
  }
  return r;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!(product(i, j) == product(j, i))) return false;
  return true;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.field_ == b.field_ && a.unit_ == b.unit_ && a.products_ == b.products_;
}

Algebra opposite(const Algebra& a) {
  std::vector<SparseVector> prods(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) prods[i * a.dim() + j] = a.product(j, i);
  std::string name = a.name();
  const std::string suffix = "^op";
  if (name.size() > suffix.size() && name.ends_with(suffix))
    name.resize(name.size() - suffix.size());
  else
    name += suffix;
  return Algebra(a.field(), a.labels(), a.unit(), std::move(prods), std::move(name));
}

Algebra tensor_algebras(std::span<const Algebra> factors) {
  if (factors.empty()) throw ValidationError("tensor_algebras: empty factor list");
  Algebra acc = factors[0];
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const Algebra& b = factors[f];
    const std::size_t da = acc.dim(), db = b.dim(), d = da * db;
    std::vector<std::string> labels;
    labels.reserve(d);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j)
        labels.push_back(acc.labels()[i] + "⊗" + b.labels()[j]);
    std::vector<SparseVector> prods(d * d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        prods[x * d + y] = kron(acc.product(x / db, y / db), b.product(x % db, y % db), db);
    acc = Algebra(acc.field(), std::move(labels), kron(acc.unit(), b.unit(), db), std::move(prods),
                  acc.name() + "⊗" + b.name());
  }
  return acc;
}

Algebra ground_algebra(Field field) {
  return Algebra(field, {"1"}, SparseVector::basis(0, field), {SparseVector::basis(0, field)},
                 "k");
}

Algebra dual_numbers(Field field, const std::string& var) {
  auto e = [&](std::size_t i) { return SparseVector::basis(i, field); };
  return Algebra(field, {"1", var}, e(0), {e(0), e(1), e(1), SparseVector{}},
                 "k[" + var + "]/(" + var + "^2)");
}

Algebra split_algebra(Field field) {
  auto e = [&](std::size_t i) { return SparseVector::basis(i, field); };
  SparseVector unit;
  unit.push_back(0, field.one());
  unit.push_back(1, field.one());
  return Algebra(field, {"e1", "e2"}, unit, {e(0), SparseVector{}, SparseVector{}, e(1)}, "kxk");
}

Algebra matrix_algebra(Field field, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<SparseVector> prods(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      // e_ij e_kl = [j == k] e_il
      std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
      if (j == k) prods[a * d + b] = SparseVector::basis(i * n + l, field);
    }
  SparseVector unit;
  for (std::size_t i = 0; i < n; ++i) unit.push_back(i * n + i, field.one());
  return Algebra(field, std::move(labels), unit, std::move(prods),
                 "M" + std::to_string(n) + "(k)");
}

// ---------------------------------------------------------------------------

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->dim() || matrix_.cols() != source_->dim())
    throw ValidationError("morphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + ", expected " +
                          std::to_string(target_->dim()) + "x" + std::to_string(source_->dim()));
  if (!(source_->field() == target_->field()))
    throw ValidationError("morphism between algebras over different fields");
}

Report AlgebraMorphism::validate() const {
  Report r;
  const Algebra& s = *source_;
  const Algebra& t = *target_;
  CheckOutcome& mult = r.family("morphism multiplicativity");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      SparseVector lhs = apply(s.product(i, j));
      SparseVector rhs = t.multiply(matrix_.column(i), matrix_.column(j));
      mult.expect(lhs == rhs, [&] { return "basis pair " + pair_str(i, j); });
    }
  r.expect("morphism unitality", apply(s.unit()) == t.unit(), [] { return "image of 1"; });
  return r;
}

AlgebraMorphism unit_inclusion(AlgebraPtr ground, AlgebraPtr target) {
  if (ground->dim() != 1) throw ValidationError("unit_inclusion: source must be one-dimensional");
  Matrix m = Matrix::from_columns(target->dim(), {target->unit()}, target->field());
  return AlgebraMorphism(std::move(ground), std::move(target), std::move(m));
}

Report check_epsilon(const AlgebraMorphism& eps) {
  Report r;
  const Algebra& b = *eps.source();
  const Algebra& a = *eps.target();
  CheckOutcome& comm = r.family("B commutative");
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      comm.expect(b.product(i, j) == b.product(j, i),
                  [&] { return "basis pair " + pair_str(i, j); });
  r.merge(eps.validate(), "epsilon ");
  CheckOutcome& central = r.family("epsilon image central");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const SparseVector& img = eps.matrix().column(i);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      SparseVector ek = a.basis(k);
      central.expect(a.multiply(img, ek) == a.multiply(ek, img), [&] {
        return "eps(" + b.labels()[i] + ") does not commute with " + a.labels()[k];
      });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

Bimodule::Bimodule(AlgebraPtr over, std::size_t dim, std::vector<Matrix> left,
                   std::vector<Matrix> right, std::string name)
    : over_(std::move(over)),
      dim_(dim),
      left_(std::move(left)),
      right_(std::move(right)),
      name_(std::move(name)) {
  if (left_.size() != over_->dim() || right_.size() != over_->dim())
    throw ValidationError("bimodule " + name_ + ": need one action matrix per basis element of " +
                          over_->name());
  for (const auto* side : {&left_, &right_})
    for (const auto& m : *side)
      if (m.rows() != dim_ || m.cols() != dim_)
        throw ValidationError("bimodule " + name_ + ": action matrix is " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(dim_) + "x" + std::to_string(dim_));
}

Bimodule Bimodule::regular(AlgebraPtr a) {
  std::vector<Matrix> left, right;
  const Field& f = a->field();
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::vector<SparseVector> lc, rc;
    for (std::size_t m = 0; m < a->dim(); ++m) {
      lc.push_back(a->product(i, m));
      rc.push_back(a->product(m, i));
    }
    left.push_back(Matrix::from_columns(a->dim(), std::move(lc), f));
    right.push_back(Matrix::from_columns(a->dim(), std::move(rc), f));
  }
  std::size_t d = a->dim();
  return Bimodule(std::move(a), d, std::move(left), std::move(right), "regular");
}

SparseVector Bimodule::act_left(const SparseVector& a, const SparseVector& m) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [i, x] : a)
    for (const auto& [k, y] : left_.at(i).apply(m)) acc.emplace_back(k, x * y);
  return SparseVector::from_unsorted(std::move(acc));
}

SparseVector Bimodule::act_right(const SparseVector& m, const SparseVector& a) const {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [i, x] : a)
    for (const auto& [k, y] : right_.at(i).apply(m)) acc.emplace_back(k, x * y);
  return SparseVector::from_unsorted(std::move(acc));
}

Report Bimodule::validate() const {
  Report r;
  const Algebra& a = *over_;
  const Field& f = a.field();
  CheckOutcome& lassoc = r.family("bimodule " + name_ + " left associativity");
  CheckOutcome& rassoc = r.family("bimodule " + name_ + " right associativity");
  CheckOutcome& commute = r.family("bimodule " + name_ + " actions commute");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t m = 0; m < dim_; ++m) {
        SparseVector em = SparseVector::basis(m, f);
        lassoc.expect(act_left(a.product(i, j), em) == left_[i].apply(left_[j].apply(em)),
                      [&] { return "basis triple " + triple_str(i, j, m); });
        rassoc.expect(act_right(em, a.product(i, j)) == right_[j].apply(right_[i].apply(em)),
                      [&] { return "basis triple " + triple_str(i, j, m); });
        commute.expect(right_[j].apply(left_[i].apply(em)) == left_[i].apply(right_[j].apply(em)),
                       [&] { return "basis triple " + triple_str(i, m, j); });
      }
  CheckOutcome& unit = r.family("bimodule " + name_ + " unit");
  for (std::size_t m = 0; m < dim_; ++m) {
    SparseVector em = SparseVector::basis(m, f);
    unit.expect(act_left(a.unit(), em) == em, [&] { return "1*m_" + std::to_string(m); });
    unit.expect(act_right(em, a.unit()) == em, [&] { return "m_" + std::to_string(m) + "*1"; });
  }
  return r;
}

Report check_b_symmetric(const Bimodule& m, const AlgebraMorphism& eps) {
  if (m.over().get() != eps.target().get() && !(*m.over() == *eps.target()))
    throw ValidationError("bimodule " + m.name() + " is not over the target of epsilon");
  Report r;
  CheckOutcome& sym = r.family("bimodule " + m.name() + " B-symmetric");
  const Algebra& b = *eps.source();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const SparseVector& img = eps.matrix().column(i);
    for (std::size_t k = 0; k < m.dim(); ++k) {
      SparseVector ek = SparseVector::basis(k, m.field());
      sym.expect(m.act_left(img, ek) == m.act_right(ek, img), [&] {
        return "eps(" + b.labels()[i] + ") m_" + std::to_string(k) + " != m_" +
               std::to_string(k) + " eps(" + b.labels()[i] + ")";
      });
    }
  }
  return r;
}

}  // namespace simpres
