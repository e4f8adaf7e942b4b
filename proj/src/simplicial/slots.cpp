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

#include "simpres/slots.hpp"

namespace simpres {

SlotSpace::SlotSpace(std::vector<AlgebraPtr> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw ValidationError("SlotSpace needs at least one slot");
  strides_.assign(slots_.size(), 1);
  std::size_t total = 1;
  for (std::size_t s = slots_.size(); s-- > 0;) {
    strides_[s] = total;
    if (__builtin_mul_overflow(total, slots_[s]->dim(), &total))
      throw InfeasibleError("tensor level dimension overflows size_t");
  }
  dim_ = total;
  for (const auto& a : slots_) {
    offset_.push_back(basis_.size());
    for (std::size_t j = 0; j < a->dim(); ++j) basis_.push_back(a->basis(j));
  }
}

void SlotSpace::decode(std::size_t index, std::span<std::size_t> digits) const {
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    digits[s] = index / strides_[s];
    index %= strides_[s];
  }
}

std::size_t SlotSpace::encode(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < slots_.size(); ++s) idx += digits[s] * strides_[s];
  return idx;
}

PureTensor SlotSpace::pure_basis(std::size_t index) const {
  PureTensor t;
  t.reserve(slots_.size());
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    t.push_back(basis_vector(s, index / strides_[s]));
    index %= strides_[s];
  }
  return t;
}

SparseVector SlotSpace::expand(const PureTensor& t) const {
  if (t.empty()) return {};
  // Fast path: every slot a single entry.
  bool single = true;
  for (const auto& v : t)
    if (v.size() != 1) {
      single = false;
      break;
    }
  if (single) {
    std::size_t idx = 0;
    Scalar c = t[0][0].second;
    idx += t[0][0].first * strides_[0];
    for (std::size_t s = 1; s < t.size(); ++s) {
      idx += t[s][0].first * strides_[s];
      c *= t[s][0].second;
    }
    SparseVector out;
    out.push_back(idx, std::move(c));
    return out;
  }
  std::vector<SparseVector::Entry> cur{{0, field().one()}};
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s].empty()) return {};
    std::vector<SparseVector::Entry> next;
    next.reserve(cur.size() * t[s].size());
    for (const auto& [i, x] : cur)
      for (const auto& [j, y] : t[s]) next.emplace_back(i + j * strides_[s], x * y);
    cur = std::move(next);
  }
  return SparseVector::from_unsorted(std::move(cur));
}

PureTensor SlotSpace::unit() const {
  PureTensor t;
  for (const auto& a : slots_) t.push_back(a->unit());
  return t;
}

PureTensor SlotSpace::multiply(const PureTensor& x, const PureTensor& y) const {
  if (x.empty() || y.empty()) return {};
  PureTensor t;
  t.reserve(slots_.size());
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    t.push_back(slots_[s]->multiply(x[s], y[s]));
    if (t.back().empty()) return {};
  }
  return t;
}

std::vector<PureTensor> SlotSpace::generators() const {
  std::vector<PureTensor> gens;
  PureTensor u = unit();
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    // e_j is redundant once the unit's support outside the kept indices is
    // exactly {j}: then e_j is a combination of the unit and kept elements.
    std::vector<bool> kept(slots_[s]->dim(), false);
    for (std::size_t j = 0; j < slots_[s]->dim(); ++j) {
      std::size_t outside = 0;
      bool hits_j = false;
      for (const auto& [idx, value] : u[s])
        if (!kept[idx]) {
          ++outside;
          hits_j = hits_j || idx == j;
        }
      if (outside == 1 && hits_j) continue;
      kept[j] = true;
      PureTensor g = u;
      g[s] = basis_vector(s, j);
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

PureTensor apply_slot_map(const SlotMap& map, const SlotSpace& target,
                          std::span<const SlotArg> args) {
  PureTensor out;
  out.reserve(map.outputs.size());
  for (std::size_t s = 0; s < map.outputs.size(); ++s) {
    const auto& factors = map.outputs[s];
    const Algebra& alg = target.slot(s);
    if (factors.empty()) {
      out.push_back(alg.unit());
      continue;
    }
    auto factor_vector = [&](const SlotFactor& f) -> SparseVector {
      const SparseVector& raw = f.input == SlotFactor::kConstant
                                    ? map.constants[f.slot]
                                    : args[f.input].slot_vector(f.slot);
      if (f.via < 0) return raw;
      return map.morphisms[static_cast<std::size_t>(f.via)]->apply(raw);
    };
    SparseVector v = factor_vector(factors[0]);
    for (std::size_t k = 1; k < factors.size() && !v.empty(); ++k)
      v = alg.multiply(v, factor_vector(factors[k]));
    if (v.empty()) return {};
    out.push_back(std::move(v));
  }
  return out;
}

SlotMap identity_slot_map(std::size_t slots) {
  SlotMap m;
  m.outputs.resize(slots);
  for (std::size_t s = 0; s < slots; ++s)
    m.outputs[s] = {SlotFactor{0, static_cast<std::uint32_t>(s), -1}};
  return m;
}

}  // namespace simpres
