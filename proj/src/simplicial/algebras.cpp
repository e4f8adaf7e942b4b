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

#include <string>

#include "simpres/simplicial.hpp"

namespace simpres {

namespace {

SlotFactor from0(std::size_t slot, std::int32_t via = -1) {
  return SlotFactor{0, static_cast<std::uint32_t>(slot), via};
}

std::string degree_str(std::size_t n, std::size_t i) {
  return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")";
}

}  // namespace

SimplicialAlgebra::SimplicialAlgebra(Kind kind, std::string name, AlgebraPtr a, AlgebraPtr b,
                                     std::shared_ptr<const AlgebraMorphism> eps,
                                     std::size_t max_degree)
    : kind_(kind),
      name_(std::move(name)),
      a_(std::move(a)),
      a_op_(std::make_shared<const Algebra>(opposite(*a_))),
      b_(std::move(b)),
      eps_(std::move(eps)),
      max_degree_(max_degree) {}

const SlotSpace& SimplicialAlgebra::level(std::size_t n) const {
  if (n > max_degree_)
    throw InfeasibleError("level " + std::to_string(n) + " of " + name_ +
                          " exceeds max degree " + std::to_string(max_degree_));
  return levels_.get(n, [&] { return make_level(n); });
}

const std::vector<PureTensor>& SimplicialAlgebra::generators(std::size_t n) const {
  return generators_.get(n, [&] { return level(n).generators(); });
}

void SimplicialAlgebra::check_face(std::size_t n, std::size_t i) const {
  if (n == 0 || i > n) throw ValidationError("no face " + degree_str(n, i));
  level(n);
}

void SimplicialAlgebra::check_degeneracy(std::size_t n, std::size_t i) const {
  if (i > n) throw ValidationError("no degeneracy " + degree_str(n, i));
  level(n + 1);
}

const SlotMap& SimplicialAlgebra::face_map(std::size_t n, std::size_t i) const {
  check_face(n, i);
  return faces_.get({n, i}, [&] { return make_face(n, i); });
}

const SlotMap& SimplicialAlgebra::degeneracy_map(std::size_t n, std::size_t i) const {
  check_degeneracy(n, i);
  return degeneracies_.get({n, i}, [&] { return make_degeneracy(n, i); });
}

PureTensor SimplicialAlgebra::face(std::size_t n, std::size_t i, const PureTensor& x) const {
  const SlotMap& map = face_map(n, i);
  SlotArg arg{nullptr, {}, &x};
  return apply_slot_map(map, level(n - 1), {&arg, 1});
}

PureTensor SimplicialAlgebra::degeneracy(std::size_t n, std::size_t i,
                                         const PureTensor& x) const {
  const SlotMap& map = degeneracy_map(n, i);
  SlotArg arg{nullptr, {}, &x};
  return apply_slot_map(map, level(n + 1), {&arg, 1});
}

SparseVector SimplicialAlgebra::face_vector(std::size_t n, std::size_t i,
                                            const SparseVector& v) const {
  const SlotSpace& src = level(n);
  const SlotSpace& dst = level(n - 1);
  SparseVector out;
  for (const auto& [idx, c] : v) out.axpy(c, dst.expand(face(n, i, src.pure_basis(idx))));
  return out;
}

SparseVector SimplicialAlgebra::degeneracy_vector(std::size_t n, std::size_t i,
                                                  const SparseVector& v) const {
  const SlotSpace& src = level(n);
  const SlotSpace& dst = level(n + 1);
  SparseVector out;
  for (const auto& [idx, c] : v)
    out.axpy(c, dst.expand(degeneracy(n, i, src.pure_basis(idx))));
  return out;
}

Matrix SimplicialAlgebra::face_matrix(std::size_t n, std::size_t i) const {
  const SlotSpace& src = level(n);
  const SlotSpace& dst = level(n - 1);
  std::vector<SparseVector> cols;
  cols.reserve(src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k)
    cols.push_back(dst.expand(face(n, i, src.pure_basis(k))));
  return Matrix::from_columns(dst.dim(), std::move(cols), field());
}

Matrix SimplicialAlgebra::degeneracy_matrix(std::size_t n, std::size_t i) const {
  const SlotSpace& src = level(n);
  const SlotSpace& dst = level(n + 1);
  std::vector<SparseVector> cols;
  cols.reserve(src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k)
    cols.push_back(dst.expand(degeneracy(n, i, src.pure_basis(k))));
  return Matrix::from_columns(dst.dim(), std::move(cols), field());
}

SimplicialAlgebra::OuterParts SimplicialAlgebra::outer_parts(std::size_t n,
                                                             const PureTensor& x) const {
  if (kind_ == Kind::kEnveloping) return {&x[0], &x[1], {}};
  const Algebra& b = *b_;
  SparseVector prod = x[1];
  for (std::size_t s = 2; s <= 2 * n + 1 && !prod.empty(); ++s) prod = b.multiply(prod, x[s]);
  return {&x[0], &x[2 * n + 2], eps_->apply(prod)};
}

// ---------------------------------------------------------------------------

EnvelopingAlgebra::EnvelopingAlgebra(AlgebraPtr a, std::size_t max_degree)
    : SimplicialAlgebra(Kind::kEnveloping, "A(" + a->name() + "⊗" + a->name() + "^op)", a,
                        std::make_shared<const Algebra>(ground_algebra(a->field())), nullptr,
                        max_degree) {}

SlotSpace EnvelopingAlgebra::make_level(std::size_t) const { return SlotSpace({a(), a_op()}); }

SlotMap EnvelopingAlgebra::make_face(std::size_t, std::size_t) const {
  return identity_slot_map(2);
}

SlotMap EnvelopingAlgebra::make_degeneracy(std::size_t, std::size_t) const {
  return identity_slot_map(2);
}

// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const AlgebraMorphism> validated_epsilon(
    std::shared_ptr<const AlgebraMorphism> eps) {
  Report r = check_epsilon(*eps);
  if (!r.ok()) {
    std::string msg = "invalid epsilon:";
    for (const auto& line : r.failure_lines()) msg += "\n  " + line;
    throw ValidationError(msg);
  }
  return eps;
}

}  // namespace

SecondaryAlgebra::SecondaryAlgebra(std::shared_ptr<const AlgebraMorphism> eps,
                                   std::size_t max_degree)
    : SimplicialAlgebra(Kind::kSecondary,
                        "A(" + eps->target()->name() + "," + eps->source()->name() + ",eps)",
                        eps->target(), eps->source(), validated_epsilon(eps), max_degree) {}

SlotSpace SecondaryAlgebra::make_level(std::size_t n) const {
  std::vector<AlgebraPtr> slots;
  slots.push_back(a());
  for (std::size_t k = 0; k < 2 * n + 1; ++k) slots.push_back(b());
  slots.push_back(a_op());
  return SlotSpace(std::move(slots));
}

SlotMap SecondaryAlgebra::make_face(std::size_t n, std::size_t i) const {
  // Target level n-1 has slots a, alpha_1..alpha_{n-1}, gamma, beta_1..beta_{n-1}, b.
  const std::size_t m = n - 1;
  SlotMap map;
  map.morphisms.push_back(&epsilon()->matrix());
  map.outputs.resize(2 * m + 3);
  auto& out = map.outputs;
  out[0] = {from0(0)};
  out[b_slot(m)] = {from0(b_slot(n))};
  out[gamma_slot(m)] = {from0(gamma_slot(n))};
  for (std::size_t k = 1; k <= m; ++k) {
    // Source index of the k-th alpha/beta that survives or absorbs a neighbour.
    std::size_t src = k < i ? k : k + 1;
    out[alpha_slot(k)] = {from0(alpha_slot(src))};
    out[beta_slot(m, k)] = {from0(beta_slot(n, src))};
  }
  if (i == 0) {
    out[0] = {from0(0), from0(alpha_slot(1), 0)};
    out[gamma_slot(m)] = {from0(gamma_slot(n)), from0(beta_slot(n, 1))};
  } else if (i == n) {
    out[gamma_slot(m)] = {from0(alpha_slot(n)), from0(gamma_slot(n))};
    out[b_slot(m)] = {from0(beta_slot(n, n), 0), from0(b_slot(n))};
  } else {
    out[alpha_slot(i)] = {from0(alpha_slot(i)), from0(alpha_slot(i + 1))};
    out[beta_slot(m, i)] = {from0(beta_slot(n, i)), from0(beta_slot(n, i + 1))};
  }
  return map;
}

SlotMap SecondaryAlgebra::make_degeneracy(std::size_t n, std::size_t i) const {
  const std::size_t m = n + 1;
  SlotMap map;
  map.outputs.resize(2 * m + 3);
  auto& out = map.outputs;
  out[0] = {from0(0)};
  out[gamma_slot(m)] = {from0(gamma_slot(n))};
  out[b_slot(m)] = {from0(b_slot(n))};
  for (std::size_t k = 1; k <= m; ++k) {
    if (k == i + 1) continue;  // inserted unit
    std::size_t src = k <= i ? k : k - 1;
    out[alpha_slot(k)] = {from0(alpha_slot(src))};
    out[beta_slot(m, k)] = {from0(beta_slot(n, src))};
  }
  return map;
}

SimplicialAlgebraPtr env_algebra(AlgebraPtr a, std::size_t max_degree) {
  return std::make_shared<const EnvelopingAlgebra>(std::move(a), max_degree);
}

SimplicialAlgebraPtr secondary_algebra(std::shared_ptr<const AlgebraMorphism> eps,
                                       std::size_t max_degree) {
  return std::make_shared<const SecondaryAlgebra>(std::move(eps), max_degree);
}

}  // namespace simpres
