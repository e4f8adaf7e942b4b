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

#ifndef SIMPRES_HOMOTOPY_HPP
#define SIMPRES_HOMOTOPY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "simpres/complexes.hpp"

namespace simpres {

/// Family f_n : B_n -> C_n, n = 0..top(), of maps between left modules over
/// the same simplicial algebra.
class PresimplicialMorphism {
 public:
  PresimplicialMorphism(ModulePtr source, ModulePtr target, std::vector<Matrix> maps,
                        std::string name = "f");

  static PresimplicialMorphism identity(ModulePtr m, std::size_t top);
  static PresimplicialMorphism zero(ModulePtr source, ModulePtr target, std::size_t top);
  /// Multiplication of a_0 by z on the left, or of a_{n+1} by z on the right.
  static PresimplicialMorphism end_multiplication(std::shared_ptr<const BarLikeModule> m,
                                                  Side side, const SparseVector& z,
                                                  std::size_t top);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  const std::string& name() const { return name_; }
  std::size_t top() const { return maps_.size() - 1; }
  const Matrix& at(std::size_t n) const;
  const std::vector<Matrix>& maps() const { return maps_; }

  PresimplicialMorphism scaled(const Scalar& c) const;
  PresimplicialMorphism renamed(std::string name) const;
  friend PresimplicialMorphism operator+(const PresimplicialMorphism& a,
                                         const PresimplicialMorphism& b);
  friend PresimplicialMorphism operator-(const PresimplicialMorphism& a,
                                         const PresimplicialMorphism& b);
  /// Replaces one matrix entry (fault injection).
  PresimplicialMorphism perturbed(std::size_t n, std::size_t row, std::size_t col,
                                  const Scalar& value) const;

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::vector<Matrix> maps_;
  std::string name_;
};

/// outer ∘ inner
PresimplicialMorphism compose(const PresimplicialMorphism& outer,
                              const PresimplicialMorphism& inner);
bool same_maps(const PresimplicialMorphism& a, const PresimplicialMorphism& b);

/// A_n-linearity and f_{n-1} delta_i = delta_i f_n for degrees <= up_to.
Report check_morphism(const PresimplicialMorphism& f, std::size_t up_to);

/// h(n, i) : B_n -> C_{n+1}, 0 <= i <= n <= top(), interpolating from f to g:
/// delta_0 h_0 = f and delta_{n+1} h_n = g.
class PresimplicialHomotopy {
 public:
  PresimplicialHomotopy(PresimplicialMorphism from, PresimplicialMorphism to,
                        std::vector<std::vector<Matrix>> maps, std::string name = "h");

  const PresimplicialMorphism& from() const { return from_; }
  const PresimplicialMorphism& to() const { return to_; }
  const std::string& name() const { return name_; }
  std::size_t top() const { return maps_.size() - 1; }
  const Matrix& at(std::size_t n, std::size_t i) const;
  const std::vector<std::vector<Matrix>>& maps() const { return maps_; }

  PresimplicialHomotopy perturbed(std::size_t n, std::size_t i, std::size_t row,
                                  std::size_t col, const Scalar& value) const;
  PresimplicialHomotopy renamed(std::string name) const;
  friend bool operator==(const PresimplicialHomotopy& a, const PresimplicialHomotopy& b);

 private:
  PresimplicialMorphism from_;
  PresimplicialMorphism to_;
  std::vector<std::vector<Matrix>> maps_;
  std::string name_;
};

/// Twisted linearity h_i(a·b) = sigma_i(a)·h_i(b) and the five face families,
/// for source degrees <= up_to.
Report check_homotopy(const PresimplicialHomotopy& h, std::size_t up_to);

/// h_i = sigma_i f_n, a homotopy f ~ f.
PresimplicialHomotopy reflexive_homotopy(const PresimplicialMorphism& f);
/// t_i = sigma_i (f_n + g_n) - h_i, a homotopy g ~ f.
PresimplicialHomotopy symmetric_homotopy(const PresimplicialHomotopy& h);
/// s_i = h_i + t_i - sigma_i g_n for h : f ~ g and t : g ~ l; throws
/// ValidationError if the middle endpoints differ.
PresimplicialHomotopy transitive_homotopy(const PresimplicialHomotopy& h,
                                          const PresimplicialHomotopy& t);
/// h_i = sigma_i with a central z on the inserted diagonal entry; a homotopy
/// from left to right multiplication by z.
PresimplicialHomotopy insert_central_homotopy(std::shared_ptr<const BarLikeModule> m,
                                              const SparseVector& z, std::size_t top);
/// k ∘ h : k f ~ k g
PresimplicialHomotopy compose(const PresimplicialMorphism& k, const PresimplicialHomotopy& h);
/// h ∘ p : f p ~ g p
PresimplicialHomotopy compose(const PresimplicialHomotopy& h, const PresimplicialMorphism& p);

/// f : B -> C, g : C -> B, h : gf ~ id_B, t : fg ~ id_C.
struct HomotopyEquivalence {
  PresimplicialMorphism f;
  PresimplicialMorphism g;
  PresimplicialHomotopy h;
  PresimplicialHomotopy t;
};

/// f = L_z, g = R_{z^{-1}}, h = R_{z^{-1}} ∘ (insert z) : gf ~ id and
/// t : fg ~ id obtained from L_z ∘ (insert z^{-1}) by symmetry. Throws
/// ValidationError unless z is central with z * z_inverse = 1.
HomotopyEquivalence central_twist_equivalence(std::shared_ptr<const BarLikeModule> m,
                                              const SparseVector& z,
                                              const SparseVector& z_inverse, std::size_t top);

// ---------------------------------------------------------------------------
// Lifting to tensor quotients X ⊗_A B.

/// The global sign s in dH + Hd = s (F_from - F_to) for H = sum (-1)^i h'_i.
inline constexpr int kChainHomotopySign = 1;

/// F_n(x ⊗ b) = x ⊗ f_n(b) on quotient coordinates.
std::vector<Matrix> induced_chain_map(const TensorLevels& source, const TensorLevels& target,
                                      const PresimplicialMorphism& f, std::size_t up_to);
/// h'(n, i)(x ⊗ b) = sigma_i(x) ⊗ h_i(b).
std::vector<std::vector<Matrix>> lift_homotopy(const TensorLevels& source,
                                               const TensorLevels& target,
                                               const PresimplicialHomotopy& h,
                                               std::size_t up_to);
/// H(n) = sum_i (-1)^i h'(n, i).
std::vector<Matrix> chain_homotopy_operator(const std::vector<std::vector<Matrix>>& lifted);

/// The lifted face identities: D_i h'_j = h'_{j-1} D_i (i<j),
/// D_i h'_i = D_i h'_{i-1}, D_i h'_j = h'_j D_{i-1} (i>j+1), D_0 h'_0 = F_from,
/// D_{n+1} h'_n = F_to.
Report check_lifted_identities(const TensorLevels& source, const TensorLevels& target,
                               const std::vector<std::vector<Matrix>>& lifted,
                               const std::vector<Matrix>& from,
                               const std::vector<Matrix>& to, std::size_t up_to);
/// d_{n+1} H_n + H_{n-1} d_n = sign (from_n - to_n) for n <= up_to.
Report check_chain_homotopy(const ChainComplex& source, const ChainComplex& target,
                            const std::vector<Matrix>& h, const std::vector<Matrix>& from,
                            const std::vector<Matrix>& to, int sign, std::size_t up_to,
                            const std::string& family);
/// F_{n-1} D_i = D_i F_n.
Report check_chain_map(const TensorLevels& source, const TensorLevels& target,
                       const std::vector<Matrix>& f, std::size_t up_to,
                       const std::string& name);

/// Runs the k[x]/(x^2) calibration (left vs right multiplication by x with a
/// twisted coefficient bimodule, where F != G) and returns the sign for which
/// the chain-homotopy identity holds. Throws ConstructionError if neither or
/// both signs verify.
int calibrate_chain_homotopy_sign();

struct ReplacementReport {
  Report checks;
  std::vector<std::size_t> betti_source;
  std::vector<std::size_t> betti_target;

  bool betti_equal() const { return betti_source == betti_target; }
  bool ok() const { return checks.ok() && betti_equal(); }
};

/// Checks every component of the equivalence, builds X ⊗_A B and X ⊗_A C,
/// verifies the lifted identities and both chain-homotopy identities, and
/// compares Betti tables through up_to.
ReplacementReport verify_replacement(ModulePtr x, const HomotopyEquivalence& e,
                                     std::size_t up_to, std::size_t dim_cap = 0);
/// Dual pipeline through Hom_A(-, M).
ReplacementReport verify_replacement_cohomology(CosimplicialPtr m, const HomotopyEquivalence& e,
                                                std::size_t up_to, std::size_t dim_cap = 0);

}  // namespace simpres

#endif  // SIMPRES_HOMOTOPY_HPP
