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

#ifndef SIMPRES_SIMPLICIAL_HPP
#define SIMPRES_SIMPLICIAL_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simpres/algebra.hpp"
#include "simpres/once_cache.hpp"
#include "simpres/report.hpp"
#include "simpres/slots.hpp"

namespace simpres {

/// Degree-indexed algebras A_n, each a tensor product of slot algebras, with
/// faces delta_i : A_n -> A_{n-1} (n >= 1, 0 <= i <= n) and degeneracies
/// sigma_i : A_n -> A_{n+1} (0 <= i <= n). Levels are built on demand.
class SimplicialAlgebra {
 public:
  enum class Kind { kEnveloping, kSecondary };
  static constexpr std::size_t kDefaultMaxDegree = 12;

  virtual ~SimplicialAlgebra() = default;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Field& field() const { return a_->field(); }
  std::size_t max_degree() const { return max_degree_; }
  const AlgebraPtr& a() const { return a_; }
  /// B for the secondary kind, the ground field otherwise.
  const AlgebraPtr& b() const { return b_; }
  /// Null for the enveloping kind.
  const AlgebraMorphism* epsilon() const { return eps_.get(); }

  /// Throws InfeasibleError above max_degree().
  const SlotSpace& level(std::size_t n) const;
  std::size_t level_dim(std::size_t n) const { return level(n).dim(); }
  const std::vector<PureTensor>& generators(std::size_t n) const;

  virtual PureTensor face(std::size_t n, std::size_t i, const PureTensor& x) const;
  virtual PureTensor degeneracy(std::size_t n, std::size_t i, const PureTensor& x) const;
  /// Linear extensions on flattened coordinates.
  SparseVector face_vector(std::size_t n, std::size_t i, const SparseVector& v) const;
  SparseVector degeneracy_vector(std::size_t n, std::size_t i, const SparseVector& v) const;
  Matrix face_matrix(std::size_t n, std::size_t i) const;
  Matrix degeneracy_matrix(std::size_t n, std::size_t i) const;

  const SlotMap& face_map(std::size_t n, std::size_t i) const;
  const SlotMap& degeneracy_map(std::size_t n, std::size_t i) const;

  /// For coefficient modules: the outer factors (a, b) of x and, for the
  /// secondary kind, eps of the product of all B slots (empty otherwise).
  struct OuterParts {
    const SparseVector* left;
    const SparseVector* right;
    SparseVector weight;
  };
  OuterParts outer_parts(std::size_t n, const PureTensor& x) const;

 protected:
  SimplicialAlgebra(Kind kind, std::string name, AlgebraPtr a, AlgebraPtr b,
                    std::shared_ptr<const AlgebraMorphism> eps, std::size_t max_degree);

  void check_face(std::size_t n, std::size_t i) const;
  void check_degeneracy(std::size_t n, std::size_t i) const;

 private:
  virtual SlotSpace make_level(std::size_t n) const = 0;
  virtual SlotMap make_face(std::size_t n, std::size_t i) const = 0;
  virtual SlotMap make_degeneracy(std::size_t n, std::size_t i) const = 0;

  Kind kind_;
  std::string name_;
  AlgebraPtr a_;
  AlgebraPtr a_op_;
  AlgebraPtr b_;
  std::shared_ptr<const AlgebraMorphism> eps_;
  std::size_t max_degree_;

  OnceCache<std::size_t, SlotSpace> levels_;
  OnceCache<std::size_t, std::vector<PureTensor>> generators_;
  OnceCache<std::pair<std::size_t, std::size_t>, SlotMap> faces_;
  OnceCache<std::pair<std::size_t, std::size_t>, SlotMap> degeneracies_;

 protected:
  const AlgebraPtr& a_op() const { return a_op_; }
};

using SimplicialAlgebraPtr = std::shared_ptr<const SimplicialAlgebra>;

/// A_n = A ⊗ A^op at every level; all faces and degeneracies are identities.
class EnvelopingAlgebra : public SimplicialAlgebra {
 public:
  explicit EnvelopingAlgebra(AlgebraPtr a, std::size_t max_degree = kDefaultMaxDegree);

 private:
  SlotSpace make_level(std::size_t n) const override;
  SlotMap make_face(std::size_t n, std::size_t i) const override;
  SlotMap make_degeneracy(std::size_t n, std::size_t i) const override;
};

/// A_n = A ⊗ B^{⊗2n+1} ⊗ A^op with slots a, alpha_1..alpha_n, gamma,
/// beta_1..beta_n, b in that order.
class SecondaryAlgebra : public SimplicialAlgebra {
 public:
  /// Throws ValidationError unless check_epsilon passes.
  SecondaryAlgebra(std::shared_ptr<const AlgebraMorphism> eps,
                   std::size_t max_degree = kDefaultMaxDegree);

  static std::size_t alpha_slot(std::size_t k) { return k; }
  static std::size_t gamma_slot(std::size_t n) { return n + 1; }
  static std::size_t beta_slot(std::size_t n, std::size_t k) { return n + 1 + k; }
  static std::size_t b_slot(std::size_t n) { return 2 * n + 2; }

 private:
  SlotSpace make_level(std::size_t n) const override;
  SlotMap make_face(std::size_t n, std::size_t i) const override;
  SlotMap make_degeneracy(std::size_t n, std::size_t i) const override;
};

SimplicialAlgebraPtr env_algebra(AlgebraPtr a,
                                 std::size_t max_degree = SimplicialAlgebra::kDefaultMaxDegree);
SimplicialAlgebraPtr secondary_algebra(std::shared_ptr<const AlgebraMorphism> eps,
                                       std::size_t max_degree =
                                           SimplicialAlgebra::kDefaultMaxDegree);

// ---------------------------------------------------------------------------

enum class Side { kLeft, kRight };

/// Simplicial left or right module over a simplicial algebra. Subclasses
/// supply images of basis vectors; everything else is derived.
class SimplicialModule {
 public:
  virtual ~SimplicialModule() = default;

  Side side() const { return side_; }
  const SimplicialAlgebraPtr& over() const { return over_; }
  const Field& field() const { return over_->field(); }
  const std::string& name() const { return name_; }

  virtual std::size_t level_dim(std::size_t n) const = 0;
  /// a·e_m for left modules, e_m·a for right modules.
  virtual SparseVector act(std::size_t n, const PureTensor& a, std::size_t m) const = 0;
  virtual SparseVector face_image(std::size_t n, std::size_t i, std::size_t m) const = 0;
  virtual SparseVector degeneracy_image(std::size_t n, std::size_t i, std::size_t m) const = 0;

  SparseVector act_vector(std::size_t n, const PureTensor& a, const SparseVector& v) const;
  SparseVector face(std::size_t n, std::size_t i, const SparseVector& v) const;
  SparseVector degeneracy(std::size_t n, std::size_t i, const SparseVector& v) const;
  Matrix face_matrix(std::size_t n, std::size_t i) const;
  Matrix degeneracy_matrix(std::size_t n, std::size_t i) const;
  Matrix action_matrix(std::size_t n, const PureTensor& a) const;

 protected:
  SimplicialModule(SimplicialAlgebraPtr over, Side side, std::string name)
      : over_(std::move(over)), side_(side), name_(std::move(name)) {}

 private:
  SimplicialAlgebraPtr over_;
  Side side_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const SimplicialModule>;

/// Module whose levels are slot tensor products and whose structure maps
/// are slot maps. In action maps argument 0 is the algebra element and
/// argument 1 the module element.
class SlotModule : public SimplicialModule {
 public:
  const SlotSpace& level(std::size_t n) const;
  std::size_t level_dim(std::size_t n) const override { return level(n).dim(); }
  SparseVector act(std::size_t n, const PureTensor& a, std::size_t m) const override;
  SparseVector face_image(std::size_t n, std::size_t i, std::size_t m) const override;
  SparseVector degeneracy_image(std::size_t n, std::size_t i, std::size_t m) const override;

 protected:
  using SimplicialModule::SimplicialModule;

  /// Applies a one-argument slot map from level n to level `target` on e_m.
  SparseVector apply_map(const SlotMap& map, std::size_t n, std::size_t target,
                         std::size_t m) const;
  const SlotMap& face_map(std::size_t n, std::size_t i) const;
  const SlotMap& degeneracy_map(std::size_t n, std::size_t i) const;

 private:
  virtual SlotSpace make_level(std::size_t n) const = 0;
  virtual SlotMap make_face(std::size_t n, std::size_t i) const = 0;
  virtual SlotMap make_degeneracy(std::size_t n, std::size_t i) const = 0;
  virtual SlotMap make_action(std::size_t n) const = 0;

  OnceCache<std::size_t, SlotSpace> levels_;
  OnceCache<std::size_t, SlotMap> actions_;
  OnceCache<std::pair<std::size_t, std::size_t>, SlotMap> faces_;
  OnceCache<std::pair<std::size_t, std::size_t>, SlotMap> degeneracies_;
};

/// Left modules whose level n carries a diagonal a_0, ..., a_{n+1} of A
/// slots, with A_n acting on a_0 from the left and on a_{n+1} from the right.
class BarLikeModule : public SlotModule {
 public:
  virtual std::size_t diagonal_slot(std::size_t n, std::size_t k) const = 0;

  /// Level-n map a_0 -> z a_0 (kLeft) or a_{n+1} -> a_{n+1} z (kRight).
  Matrix end_multiplication(std::size_t n, Side side, const SparseVector& z) const;
  /// sigma_i with z in place of the unit on the inserted diagonal entry.
  Matrix central_insertion(std::size_t n, std::size_t i, const SparseVector& z) const;

 protected:
  using SlotModule::SlotModule;
};

/// Classical bar resolution: level n = A^{⊗n+2} over A ⊗ A^op.
class BarModule : public BarLikeModule {
 public:
  explicit BarModule(SimplicialAlgebraPtr over);
  std::size_t diagonal_slot(std::size_t, std::size_t k) const override { return k; }

 private:
  SlotSpace make_level(std::size_t n) const override;
  SlotMap make_face(std::size_t n, std::size_t i) const override;
  SlotMap make_degeneracy(std::size_t n, std::size_t i) const override;
  SlotMap make_action(std::size_t n) const override;
};

/// Secondary bar resolution over A ⊗ B^{⊗2n+1} ⊗ A^op. Level n is an upper
/// triangular array of size n+2: diagonal slots a_0..a_{n+1} come first, then
/// the entries b_{i,j} (i < j) in row-major order.
class SecondaryBarModule : public BarLikeModule {
 public:
  explicit SecondaryBarModule(SimplicialAlgebraPtr over);
  std::size_t diagonal_slot(std::size_t, std::size_t k) const override { return k; }
  /// Slot of b_{i,j} in a level with `size` = n+2 diagonal entries.
  static std::size_t entry_slot(std::size_t size, std::size_t i, std::size_t j);

 private:
  SlotSpace make_level(std::size_t n) const override;
  SlotMap make_face(std::size_t n, std::size_t i) const override;
  SlotMap make_degeneracy(std::size_t n, std::size_t i) const override;
  SlotMap make_action(std::size_t n) const override;
};

/// A_n as a left module over itself, with the algebra's faces/degeneracies.
class RegularModule : public SlotModule {
 public:
  explicit RegularModule(SimplicialAlgebraPtr over);

 private:
  SlotSpace make_level(std::size_t n) const override;
  SlotMap make_face(std::size_t n, std::size_t i) const override;
  SlotMap make_degeneracy(std::size_t n, std::size_t i) const override;
  SlotMap make_action(std::size_t n) const override;
};

/// Constant right module M with identity structure maps:
/// m·(a ⊗ b) = b m a, and for the secondary kind
/// m·(a ⊗ alphas ⊗ gamma ⊗ betas ⊗ b) = b m a eps(prod of B slots).
class CoefficientModule : public SimplicialModule {
 public:
  /// Throws ValidationError if M is over a different algebra or, for the
  /// secondary kind, is not B-symmetric.
  CoefficientModule(BimodulePtr m, SimplicialAlgebraPtr over);

  const Bimodule& bimodule() const { return *m_; }
  std::size_t level_dim(std::size_t) const override { return m_->dim(); }
  SparseVector act(std::size_t n, const PureTensor& a, std::size_t m) const override;
  SparseVector face_image(std::size_t n, std::size_t i, std::size_t m) const override;
  SparseVector degeneracy_image(std::size_t n, std::size_t i, std::size_t m) const override;

 private:
  BimodulePtr m_;
};

ModulePtr bar_module(SimplicialAlgebraPtr env);
ModulePtr secondary_bar_module(SimplicialAlgebraPtr secondary);
ModulePtr coefficient_right_module(BimodulePtr m, SimplicialAlgebraPtr over);

// ---------------------------------------------------------------------------

/// Cosimplicial left module: cofaces d^i : M_n -> M_{n+1} (0 <= i <= n+1)
/// and codegeneracies s^i : M_{n+1} -> M_n (0 <= i <= n).
class CosimplicialModule {
 public:
  virtual ~CosimplicialModule() = default;

  const SimplicialAlgebraPtr& over() const { return over_; }
  const Field& field() const { return over_->field(); }
  const std::string& name() const { return name_; }

  virtual std::size_t level_dim(std::size_t n) const = 0;
  virtual SparseVector act(std::size_t n, const PureTensor& a, std::size_t m) const = 0;
  virtual SparseVector coface_image(std::size_t n, std::size_t i, std::size_t m) const = 0;
  virtual SparseVector codegeneracy_image(std::size_t n, std::size_t i, std::size_t m) const = 0;

  SparseVector act_vector(std::size_t n, const PureTensor& a, const SparseVector& v) const;
  SparseVector coface(std::size_t n, std::size_t i, const SparseVector& v) const;
  SparseVector codegeneracy(std::size_t n, std::size_t i, const SparseVector& v) const;

 protected:
  CosimplicialModule(SimplicialAlgebraPtr over, std::string name)
      : over_(std::move(over)), name_(std::move(name)) {}

 private:
  SimplicialAlgebraPtr over_;
  std::string name_;
};

using CosimplicialPtr = std::shared_ptr<const CosimplicialModule>;

/// Constant levels M, identity cofaces/codegeneracies, left action
/// (a ⊗ b)·m = a m b, and for the secondary kind a m b eps(prod of B slots).
class ConstantCosimplicialModule : public CosimplicialModule {
 public:
  ConstantCosimplicialModule(BimodulePtr m, SimplicialAlgebraPtr over);

  const Bimodule& bimodule() const { return *m_; }
  std::size_t level_dim(std::size_t) const override { return m_->dim(); }
  SparseVector act(std::size_t n, const PureTensor& a, std::size_t m) const override;
  SparseVector coface_image(std::size_t n, std::size_t i, std::size_t m) const override;
  SparseVector codegeneracy_image(std::size_t n, std::size_t i, std::size_t m) const override;

 private:
  BimodulePtr m_;
};

CosimplicialPtr constant_cosimplicial_module(BimodulePtr m, SimplicialAlgebraPtr over);

// ---------------------------------------------------------------------------
// Exhaustive checkers. `up_to` is the highest source degree; levels up to
// up_to + 1 are touched.

/// Type-erased simplicial vector space.
struct SimplicialView {
  Field field;
  std::function<std::size_t(std::size_t)> dim;
  std::function<SparseVector(std::size_t, std::size_t, const SparseVector&)> face;
  std::function<SparseVector(std::size_t, std::size_t, const SparseVector&)> degeneracy;
  /// Faces only; degeneracy identities are skipped.
  bool presimplicial = false;
};

struct CosimplicialView {
  Field field;
  std::function<std::size_t(std::size_t)> dim;
  std::function<SparseVector(std::size_t, std::size_t, const SparseVector&)> coface;
  std::function<SparseVector(std::size_t, std::size_t, const SparseVector&)> codegeneracy;
};

SimplicialView view_of(const SimplicialAlgebra& a);
SimplicialView view_of(const SimplicialModule& m);
CosimplicialView view_of(const CosimplicialModule& m);

/// delta_i delta_j = delta_{j-1} delta_i (i < j) and, unless presimplicial,
/// the degeneracy identities. Failures name (n, i, j) and the basis vector.
Report check_simplicial_identities(const SimplicialView& s, std::size_t up_to);
Report check_simplicial_identities(const SimplicialAlgebra& a, std::size_t up_to);
Report check_simplicial_identities(const SimplicialModule& m, std::size_t up_to);
/// Duals: d^j d^i = d^i d^{j-1} (i < j), s^j s^i = s^i s^{j+1} (i <= j),
/// s^j d^i against the three cases.
Report check_cosimplicial_identities(const CosimplicialView& c, std::size_t up_to);

/// Faces and degeneracies are unital and multiplicative; multiplicativity is
/// checked on (generator, basis) pairs, which suffices.
Report check_algebra_morphisms(const SimplicialAlgebra& a, std::size_t up_to);
/// Unit acts as the identity and the action is associative, over
/// (generator, basis, module basis) triples.
Report check_module_action(const SimplicialModule& m, std::size_t up_to);
/// delta(a·m) = delta(a)·delta(m) and sigma(a·m) = sigma(a)·sigma(m) for
/// generators a of A_n and basis vectors m.
Report check_module_compatibility(const SimplicialModule& m, std::size_t up_to);
/// d^i(delta_i(a)·m) = a·d^i(m) and s^i(sigma_i(a)·m) = a·s^i(m), plus the
/// action laws.
Report check_cosimplicial_compatibility(const CosimplicialModule& m, std::size_t up_to);

}  // namespace simpres

#endif  // SIMPRES_SIMPLICIAL_HPP
