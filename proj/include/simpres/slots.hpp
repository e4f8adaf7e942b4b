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

#ifndef SIMPRES_SLOTS_HPP
#define SIMPRES_SLOTS_HPP

// Tensor products of algebra-valued slots and the symbolic maps between
// them. Every face, degeneracy and action of the bar-like constructions is
// a SlotMap: each output slot is an ordered product of input slots
// (optionally pushed through a linear map such as epsilon), or the unit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "simpres/algebra.hpp"

namespace simpres {

/// One coordinate vector per slot; represents the pure tensor v_0 ⊗ v_1 ⊗ ...
using PureTensor = std::vector<SparseVector>;

/// V_0 ⊗ ... ⊗ V_{k-1} with algebra-valued slots. Basis indices flatten
/// slot digits with the leftmost slot slowest-varying.
class SlotSpace {
 public:
  SlotSpace() = default;
  explicit SlotSpace(std::vector<AlgebraPtr> slots);

  std::size_t slot_count() const { return slots_.size(); }
  const Algebra& slot(std::size_t s) const { return *slots_[s]; }
  const AlgebraPtr& slot_ptr(std::size_t s) const { return slots_[s]; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return slots_.front()->field(); }

  void decode(std::size_t index, std::span<std::size_t> digits) const;
  std::size_t encode(std::span<const std::size_t> digits) const;
  /// e_j in slot s (cached).
  const SparseVector& basis_vector(std::size_t s, std::size_t j) const {
    return basis_[offset_[s] + j];
  }
  PureTensor pure_basis(std::size_t index) const;

  /// Kronecker expansion of a pure tensor into flattened coordinates.
  SparseVector expand(const PureTensor& t) const;
  PureTensor unit() const;
  PureTensor multiply(const PureTensor& x, const PureTensor& y) const;
  /// Elements with exactly one non-unit slot (a basis element there),
  /// skipping basis elements spanned by the unit and earlier generators of
  /// the same slot. They generate the algebra.
  std::vector<PureTensor> generators() const;

 private:
  std::vector<AlgebraPtr> slots_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> offset_;
  std::vector<SparseVector> basis_;
  std::size_t dim_ = 0;
};

struct SlotFactor {
  static constexpr std::uint8_t kConstant = 0xff;

  std::uint8_t input = 0;   // argument number, or kConstant
  std::uint32_t slot = 0;   // slot of that argument, or constant index
  std::int32_t via = -1;    // index into SlotMap::morphisms, -1 for none
};

/// Output slot s is the product outputs[s][0] * outputs[s][1] * ... taken in
/// the algebra of the target's slot s; an empty product is the unit.
struct SlotMap {
  std::vector<std::vector<SlotFactor>> outputs;
  std::vector<SparseVector> constants;
  std::vector<const Matrix*> morphisms;
};

/// One argument of a SlotMap: either basis digits of `space`, or an explicit
/// pure tensor.
struct SlotArg {
  const SlotSpace* space = nullptr;
  std::span<const std::size_t> digits;
  const PureTensor* tensor = nullptr;

  const SparseVector& slot_vector(std::size_t s) const {
    return tensor ? (*tensor)[s] : space->basis_vector(s, digits[s]);
  }
};

/// Evaluates a slot map. Returns an empty PureTensor when some slot vanishes.
PureTensor apply_slot_map(const SlotMap& map, const SlotSpace& target,
                          std::span<const SlotArg> args);

/// Identity slot map on k slots of argument 0.
SlotMap identity_slot_map(std::size_t slots);

}  // namespace simpres

#endif  // SIMPRES_SLOTS_HPP
