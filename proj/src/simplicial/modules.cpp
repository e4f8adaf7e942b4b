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

SlotFactor arg(std::uint8_t input, std::size_t slot, std::int32_t via = -1) {
  return SlotFactor{input, static_cast<std::uint32_t>(slot), via};
}

Matrix from_images(std::size_t rows, std::size_t cols, const Field& f, auto&& image) {
  std::vector<SparseVector> c;
  c.reserve(cols);
  for (std::size_t k = 0; k < cols; ++k) c.push_back(image(k));
  return Matrix::from_columns(rows, std::move(c), f);
}

}  // namespace

SparseVector SimplicialModule::act_vector(std::size_t n, const PureTensor& a,
                                          const SparseVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.axpy(c, act(n, a, m));
  return out;
}

SparseVector SimplicialModule::face(std::size_t n, std::size_t i, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.axpy(c, face_image(n, i, m));
  return out;
}

SparseVector SimplicialModule::degeneracy(std::size_t n, std::size_t i,
                                          const SparseVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.axpy(c, degeneracy_image(n, i, m));
  return out;
}

Matrix SimplicialModule::face_matrix(std::size_t n, std::size_t i) const {
  return from_images(level_dim(n - 1), level_dim(n), field(),
                     [&](std::size_t m) { return face_image(n, i, m); });
}

Matrix SimplicialModule::degeneracy_matrix(std::size_t n, std::size_t i) const {
  return from_images(level_dim(n + 1), level_dim(n), field(),
                     [&](std::size_t m) { return degeneracy_image(n, i, m); });
}

Matrix SimplicialModule::action_matrix(std::size_t n, const PureTensor& a) const {
  return from_images(level_dim(n), level_dim(n), field(),
                     [&](std::size_t m) { return act(n, a, m); });
}

// ---------------------------------------------------------------------------

const SlotSpace& SlotModule::level(std::size_t n) const {
  over()->level(n);  // enforces the degree cap
  return levels_.get(n, [&] { return make_level(n); });
}

const SlotMap& SlotModule::face_map(std::size_t n, std::size_t i) const {
  if (n == 0 || i > n)
    throw ValidationError("no face (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")");
  return faces_.get({n, i}, [&] { return make_face(n, i); });
}

const SlotMap& SlotModule::degeneracy_map(std::size_t n, std::size_t i) const {
  if (i > n)
    throw ValidationError("no degeneracy (n=" + std::to_string(n) +
                          ", i=" + std::to_string(i) + ")");
  return degeneracies_.get({n, i}, [&] { return make_degeneracy(n, i); });
}

SparseVector SlotModule::apply_map(const SlotMap& map, std::size_t n, std::size_t target,
                                   std::size_t m) const {
  const SlotSpace& src = level(n);
  const SlotSpace& dst = level(target);
  std::vector<std::size_t> digits(src.slot_count());
  src.decode(m, digits);
  SlotArg a{&src, digits, nullptr};
  return dst.expand(apply_slot_map(map, dst, {&a, 1}));
}

SparseVector SlotModule::act(std::size_t n, const PureTensor& a, std::size_t m) const {
  const SlotSpace& lv = level(n);
  const SlotMap& map = actions_.get(n, [&] { return make_action(n); });
  std::vector<std::size_t> digits(lv.slot_count());
  lv.decode(m, digits);
  SlotArg args[2] = {{nullptr, {}, &a}, {&lv, digits, nullptr}};
  return lv.expand(apply_slot_map(map, lv, args));
}

SparseVector SlotModule::face_image(std::size_t n, std::size_t i, std::size_t m) const {
  return apply_map(face_map(n, i), n, n - 1, m);
}

SparseVector SlotModule::degeneracy_image(std::size_t n, std::size_t i, std::size_t m) const {
  return apply_map(degeneracy_map(n, i), n, n + 1, m);
}

// ---------------------------------------------------------------------------

Matrix BarLikeModule::end_multiplication(std::size_t n, Side side, const SparseVector& z) const {
  const SlotSpace& lv = level(n);
  SlotMap map = identity_slot_map(lv.slot_count());
  map.constants.push_back(z);
  SlotFactor zf{SlotFactor::kConstant, 0, -1};
  if (side == Side::kLeft) {
    std::size_t s = diagonal_slot(n, 0);
    map.outputs[s] = {zf, arg(0, s)};
  } else {
    std::size_t s = diagonal_slot(n, n + 1);
    map.outputs[s] = {arg(0, s), zf};
  }
  return from_images(lv.dim(), lv.dim(), field(),
                     [&](std::size_t m) { return apply_map(map, n, n, m); });
}

Matrix BarLikeModule::central_insertion(std::size_t n, std::size_t i,
                                        const SparseVector& z) const {
  SlotMap map = degeneracy_map(n, i);
  map.constants.push_back(z);
  map.outputs[diagonal_slot(n + 1, i + 1)] = {SlotFactor{SlotFactor::kConstant,
                                                          static_cast<std::uint32_t>(
                                                              map.constants.size() - 1),
                                                          -1}};
  return from_images(level_dim(n + 1), level_dim(n), field(),
                     [&](std::size_t m) { return apply_map(map, n, n + 1, m); });
}

// ---------------------------------------------------------------------------

namespace {

void require_kind(const SimplicialAlgebra& a, SimplicialAlgebra::Kind kind, const char* what) {
  if (a.kind() != kind) throw ValidationError(std::string(what) + " needs a different simplicial algebra kind than " + a.name());
}

}  // namespace

BarModule::BarModule(SimplicialAlgebraPtr over)
    : BarLikeModule(std::move(over), Side::kLeft, "B(A)") {
  require_kind(*this->over(), SimplicialAlgebra::Kind::kEnveloping, "the bar resolution");
}

SlotSpace BarModule::make_level(std::size_t n) const {
  return SlotSpace(std::vector<AlgebraPtr>(n + 2, over()->a()));
}

SlotMap BarModule::make_face(std::size_t n, std::size_t i) const {
  SlotMap map;
  map.outputs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k < i) map.outputs[k] = {arg(0, k)};
    else if (k == i) map.outputs[k] = {arg(0, i), arg(0, i + 1)};
    else map.outputs[k] = {arg(0, k + 1)};
  }
  return map;
}

SlotMap BarModule::make_degeneracy(std::size_t n, std::size_t i) const {
  SlotMap map;
  map.outputs.resize(n + 3);
  for (std::size_t k = 0; k < n + 3; ++k) {
    if (k <= i) map.outputs[k] = {arg(0, k)};
    else if (k > i + 1) map.outputs[k] = {arg(0, k - 1)};
  }
  return map;
}

SlotMap BarModule::make_action(std::size_t n) const {
  SlotMap map = identity_slot_map(n + 2);
  for (auto& o : map.outputs) o[0].input = 1;
  map.outputs[0] = {arg(0, 0), arg(1, 0)};
  map.outputs[n + 1] = {arg(1, n + 1), arg(0, 1)};
  return map;
}

// ---------------------------------------------------------------------------

SecondaryBarModule::SecondaryBarModule(SimplicialAlgebraPtr over)
    : BarLikeModule(std::move(over), Side::kLeft, "B(A,B,eps)") {
  require_kind(*this->over(), SimplicialAlgebra::Kind::kSecondary,
               "the secondary bar resolution");
}

std::size_t SecondaryBarModule::entry_slot(std::size_t size, std::size_t i, std::size_t j) {
  // Rows before i contribute size-1-r entries each.
  std::size_t before = i * (size - 1) - i * (i - 1) / 2;
  return size + before + (j - i - 1);
}

SlotSpace SecondaryBarModule::make_level(std::size_t n) const {
  std::size_t size = n + 2;
  std::vector<AlgebraPtr> slots(size, over()->a());
  slots.resize(size + size * (size - 1) / 2, over()->b());
  return SlotSpace(std::move(slots));
}

SlotMap SecondaryBarModule::make_face(std::size_t n, std::size_t i) const {
  const std::size_t size = n + 2, out_size = n + 1;
  auto pre = [&](std::size_t k) -> std::vector<std::size_t> {
    if (k < i) return {k};
    if (k == i) return {i, i + 1};
    return {k + 1};
  };
  SlotMap map;
  map.morphisms.push_back(&over()->epsilon()->matrix());
  map.outputs.resize(out_size + out_size * (out_size - 1) / 2);
  for (std::size_t k = 0; k < out_size; ++k)
    map.outputs[k] = k == i ? std::vector<SlotFactor>{arg(0, i),
                                                      arg(0, entry_slot(size, i, i + 1), 0),
                                                      arg(0, i + 1)}
                            : std::vector<SlotFactor>{arg(0, pre(k)[0])};
  for (std::size_t k = 0; k < out_size; ++k)
    for (std::size_t l = k + 1; l < out_size; ++l) {
      auto& o = map.outputs[entry_slot(out_size, k, l)];
      for (std::size_t r : pre(k))
        for (std::size_t c : pre(l)) o.push_back(arg(0, entry_slot(size, r, c)));
    }
  return map;
}

SlotMap SecondaryBarModule::make_degeneracy(std::size_t n, std::size_t i) const {
  const std::size_t size = n + 2, out_size = n + 3, ins = i + 1;
  auto pre = [&](std::size_t k) { return k < ins ? k : k - 1; };
  SlotMap map;
  map.outputs.resize(out_size + out_size * (out_size - 1) / 2);
  for (std::size_t k = 0; k < out_size; ++k)
    if (k != ins) map.outputs[k] = {arg(0, pre(k))};
  for (std::size_t k = 0; k < out_size; ++k)
    for (std::size_t l = k + 1; l < out_size; ++l)
      if (k != ins && l != ins)
        map.outputs[entry_slot(out_size, k, l)] = {arg(0, entry_slot(size, pre(k), pre(l)))};
  return map;
}

SlotMap SecondaryBarModule::make_action(std::size_t n) const {
  using SA = SecondaryAlgebra;
  const std::size_t size = n + 2;
  SlotMap map = identity_slot_map(size + size * (size - 1) / 2);
  for (auto& o : map.outputs) o[0].input = 1;
  map.outputs[0] = {arg(0, 0), arg(1, 0)};
  map.outputs[n + 1] = {arg(1, n + 1), arg(0, SA::b_slot(n))};
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t s = entry_slot(size, 0, j);
    map.outputs[s] = {arg(0, SA::alpha_slot(j)), arg(1, s)};
  }
  std::size_t corner = entry_slot(size, 0, n + 1);
  map.outputs[corner] = {arg(0, SA::gamma_slot(n)), arg(1, corner)};
  for (std::size_t r = 1; r <= n; ++r) {
    std::size_t s = entry_slot(size, r, n + 1);
    map.outputs[s] = {arg(1, s), arg(0, SA::beta_slot(n, r))};
  }
  return map;
}

// ---------------------------------------------------------------------------

RegularModule::RegularModule(SimplicialAlgebraPtr over)
    : SlotModule(std::move(over), Side::kLeft, "regular") {}

SlotSpace RegularModule::make_level(std::size_t n) const { return over()->level(n); }

SlotMap RegularModule::make_face(std::size_t n, std::size_t i) const {
  return over()->face_map(n, i);
}

SlotMap RegularModule::make_degeneracy(std::size_t n, std::size_t i) const {
  return over()->degeneracy_map(n, i);
}

SlotMap RegularModule::make_action(std::size_t n) const {
  std::size_t k = over()->level(n).slot_count();
  SlotMap map;
  map.outputs.resize(k);
  for (std::size_t s = 0; s < k; ++s) map.outputs[s] = {arg(0, s), arg(1, s)};
  return map;
}

// ---------------------------------------------------------------------------

namespace {

void check_coefficients(const Bimodule& m, const SimplicialAlgebra& over) {
  if (m.over().get() != over.a().get() && !(*m.over() == *over.a()))
    throw ValidationError("bimodule " + m.name() + " is not over the base algebra of " +
                          over.name());
  if (over.kind() == SimplicialAlgebra::Kind::kSecondary) {
    Report r = check_b_symmetric(m, *over.epsilon());
    if (!r.ok()) {
      std::string msg = "bimodule " + m.name() + " is not B-symmetric:";
      for (const auto& line : r.failure_lines()) msg += "\n  " + line;
      throw ValidationError(msg);
    }
  }
}

}  // namespace

CoefficientModule::CoefficientModule(BimodulePtr m, SimplicialAlgebraPtr over)
    : SimplicialModule(std::move(over), Side::kRight, m->name()), m_(std::move(m)) {
  check_coefficients(*m_, *this->over());
}

SparseVector CoefficientModule::act(std::size_t n, const PureTensor& a, std::size_t m) const {
  auto parts = over()->outer_parts(n, a);
  SparseVector v = m_->act_right(SparseVector::basis(m, field()), *parts.left);
  if (over()->kind() == SimplicialAlgebra::Kind::kSecondary) v = m_->act_right(v, parts.weight);
  return m_->act_left(*parts.right, v);
}

SparseVector CoefficientModule::face_image(std::size_t n, std::size_t i, std::size_t m) const {
  if (n == 0 || i > n) throw ValidationError("no face at degree 0");
  return SparseVector::basis(m, field());
}

SparseVector CoefficientModule::degeneracy_image(std::size_t n, std::size_t i,
                                                 std::size_t m) const {
  if (i > n) throw ValidationError("degeneracy index out of range");
  return SparseVector::basis(m, field());
}

ConstantCosimplicialModule::ConstantCosimplicialModule(BimodulePtr m, SimplicialAlgebraPtr over)
    : CosimplicialModule(std::move(over), m->name()), m_(std::move(m)) {
  check_coefficients(*m_, *this->over());
}

SparseVector ConstantCosimplicialModule::act(std::size_t n, const PureTensor& a,
                                             std::size_t m) const {
  auto parts = over()->outer_parts(n, a);
  SparseVector v = m_->act_left(*parts.left, SparseVector::basis(m, field()));
  v = m_->act_right(v, *parts.right);
  if (over()->kind() == SimplicialAlgebra::Kind::kSecondary) v = m_->act_right(v, parts.weight);
  return v;
}

SparseVector ConstantCosimplicialModule::coface_image(std::size_t n, std::size_t i,
                                                      std::size_t m) const {
  if (i > n + 1) throw ValidationError("coface index out of range");
  return SparseVector::basis(m, field());
}

SparseVector ConstantCosimplicialModule::codegeneracy_image(std::size_t n, std::size_t i,
                                                            std::size_t m) const {
  if (i > n) throw ValidationError("codegeneracy index out of range");
  return SparseVector::basis(m, field());
}

SparseVector CosimplicialModule::act_vector(std::size_t n, const PureTensor& a,
                                            const SparseVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.axpy(c, act(n, a, m));
  return out;
}

SparseVector CosimplicialModule::coface(std::size_t n, std::size_t i,
                                        const SparseVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.axpy(c, coface_image(n, i, m));
  return out;
}

SparseVector CosimplicialModule::codegeneracy(std::size_t n, std::size_t i,
                                              const SparseVector& v) const {
  SparseVector out;
  for (const auto& [m, c] : v) out.axpy(c, codegeneracy_image(n, i, m));
  return out;
}

// ---------------------------------------------------------------------------

ModulePtr bar_module(SimplicialAlgebraPtr env) {
  return std::make_shared<const BarModule>(std::move(env));
}

ModulePtr secondary_bar_module(SimplicialAlgebraPtr secondary) {
  return std::make_shared<const SecondaryBarModule>(std::move(secondary));
}

ModulePtr coefficient_right_module(BimodulePtr m, SimplicialAlgebraPtr over) {
  return std::make_shared<const CoefficientModule>(std::move(m), std::move(over));
}

CosimplicialPtr constant_cosimplicial_module(BimodulePtr m, SimplicialAlgebraPtr over) {
  return std::make_shared<const ConstantCosimplicialModule>(std::move(m), std::move(over));
}

}  // namespace simpres
