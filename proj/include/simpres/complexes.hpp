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

#ifndef SIMPRES_COMPLEXES_HPP
#define SIMPRES_COMPLEXES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "simpres/linalg.hpp"
#include "simpres/simplicial.hpp"

namespace simpres {

/// Image of a basis vector under some linear map.
using LinearImage = std::function<SparseVector(std::size_t)>;

/// Levels X_n ⊗_{A_n} Y_n of a right module X and a left module Y over the
/// same simplicial algebra, as quotients of X_n ⊗ Y_n (index x * dim Y_n + y)
/// by the balancing relations (x·a) ⊗ y - x ⊗ (a·y).
class TensorLevels {
 public:
  enum class Relations {
    /// a ranges over the slot generators of A_n; spans the same subspace.
    kGenerators,
    /// a ranges over the whole basis of A_n.
    kFullBasis,
  };

  /// dim_cap bounds the ambient dimension of any level built (0 = none).
  TensorLevels(ModulePtr x, ModulePtr y, Relations relations = Relations::kGenerators,
               std::size_t dim_cap = 0);

  const SimplicialModule& x() const { return *x_; }
  const SimplicialModule& y() const { return *y_; }
  const Field& field() const { return x_->field(); }

  /// dim X_n * dim Y_n; throws InfeasibleError above the cap.
  std::size_t ambient_dim(std::size_t n) const;
  const QuotientSpace& level(std::size_t n) const;
  std::size_t dim(std::size_t n) const { return level(n).dim(); }

  /// D(n, i) and S(n, i) in quotient coordinates. Building them checks that
  /// the pre-quotient map carries relations into relations; a failure throws
  /// ConstructionError.
  const Matrix& face(std::size_t n, std::size_t i) const;
  const Matrix& degeneracy(std::size_t n, std::size_t i) const;

  /// projection_target ∘ (fx ⊗ fy) ∘ section at level n, where fx and fy send
  /// basis vectors of X_n, Y_n into target.x() and target.y() at level
  /// target_n. Throws ConstructionError naming `what` if some relation of
  /// level n is not carried into the relations of the target level.
  Matrix induced(std::size_t n, const TensorLevels& target, std::size_t target_n,
                 const LinearImage& fx, const LinearImage& fy, const std::string& what) const;

  SimplicialView view() const;

 private:
  QuotientSpace build_level(std::size_t n) const;

  ModulePtr x_;
  ModulePtr y_;
  Relations relations_;
  std::size_t dim_cap_;
  OnceCache<std::size_t, QuotientSpace> levels_;
  OnceCache<std::pair<std::size_t, std::size_t>, Matrix> faces_;
  OnceCache<std::pair<std::size_t, std::size_t>, Matrix> degeneracies_;
};

/// Levels Hom_{A_n}(X_n, M_n) of a left module X and a cosimplicial left
/// module M, as subspaces of Hom_k(X_n, M_n). A map phi has coordinates
/// phi[x * dim M_n + m] = coefficient of e_m in phi(e_x).
class HomLevels {
 public:
  HomLevels(ModulePtr x, CosimplicialPtr m, std::size_t dim_cap = 0);

  const SimplicialModule& x() const { return *x_; }
  const CosimplicialModule& m() const { return *m_; }
  const Field& field() const { return x_->field(); }

  std::size_t ambient_dim(std::size_t n) const;
  /// Equivariant maps; basis vectors are 1 at their free unknown.
  const Subspace& level(std::size_t n) const;
  std::size_t dim(std::size_t n) const { return level(n).dim(); }

  /// phi -> d^i ∘ phi ∘ delta_i, Hom_n -> Hom_{n+1}.
  const Matrix& coface(std::size_t n, std::size_t i) const;
  /// phi -> s^i ∘ phi ∘ sigma_i, Hom_{n+1} -> Hom_n.
  const Matrix& codegeneracy(std::size_t n, std::size_t i) const;

  /// phi -> post ∘ phi ∘ pre from level n into `target` at level target_n,
  /// where pre maps basis vectors of target.x() at target_n into X_n and post
  /// maps basis vectors of M_n into target.m() at target_n. Throws
  /// ConstructionError naming `what` if an image is not equivariant.
  Matrix induced(std::size_t n, const HomLevels& target, std::size_t target_n,
                 const LinearImage& pre, const LinearImage& post,
                 const std::string& what) const;

  CosimplicialView view() const;

 private:
  Subspace build_level(std::size_t n) const;

  ModulePtr x_;
  CosimplicialPtr m_;
  std::size_t dim_cap_;
  OnceCache<std::size_t, Subspace> levels_;
  OnceCache<std::pair<std::size_t, std::size_t>, Matrix> cofaces_;
  OnceCache<std::pair<std::size_t, std::size_t>, Matrix> codegeneracies_;
};

/// Finite complex in degrees 0..top(). For chain complexes differential(n)
/// is d_n : C_n -> C_{n-1} (n >= 1); for cochain complexes it is
/// d^n : C^n -> C^{n+1} (n < top()). d∘d = 0 is verified on construction.
class ChainComplex {
 public:
  enum class Direction { kChain, kCochain };

  /// differentials[k] is d_{k+1} (chain) or d^k (cochain). Throws
  /// ConstructionError on shape mismatch or d∘d != 0.
  ChainComplex(Direction direction, std::vector<std::size_t> dims,
               std::vector<Matrix> differentials, Field field);

  Direction direction() const { return direction_; }
  std::size_t top() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t n) const { return dims_.at(n); }
  const Field& field() const { return field_; }
  /// Zero map where the complex ends.
  Matrix differential(std::size_t n) const;
  std::size_t rank_of(std::size_t n) const;

  /// dim ker - rank of the incoming differential; needs n < top().
  std::size_t betti(std::size_t n) const;
  std::vector<std::size_t> betti_table(std::size_t up_to) const;

  /// Number of d∘d products verified (all zero).
  std::size_t verified_compositions() const { return verified_; }

 private:
  Direction direction_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> diffs_;
  std::vector<std::size_t> ranks_;
  Field field_;
  std::size_t verified_ = 0;
};

/// d_n = sum_i (-1)^i D(n, i) over levels 0..top.
ChainComplex to_chain_complex(const TensorLevels& t, std::size_t top);
/// d^n = sum_i (-1)^i coface(n, i) over levels 0..top.
ChainComplex to_cochain_complex(const HomLevels& h, std::size_t top);

/// sum_i (-1)^i maps[i]
Matrix alternating_sum(const std::vector<Matrix>& maps);

}  // namespace simpres

#endif  // SIMPRES_COMPLEXES_HPP
