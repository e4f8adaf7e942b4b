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

#ifndef SIMPRES_ALGEBRA_HPP
#define SIMPRES_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "simpres/matrix.hpp"
#include "simpres/report.hpp"

namespace simpres {

/// Finite-dimensional associative unital algebra given by structure
/// constants: product(i, j) holds the coordinates of e_i * e_j.
class Algebra {
 public:
  /// Throws ValidationError on inconsistent shapes. Associativity and the
  /// unit laws are not enforced here; see validate().
  Algebra(Field field, std::vector<std::string> labels, SparseVector unit,
          std::vector<SparseVector> products, std::string name = "A");

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const {
    return products_[i * dim() + j];
  }

  /// Bilinear extension of the structure constants. Throws ValidationError
  /// if either vector has an index outside dim().
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  SparseVector basis(std::size_t i) const { return SparseVector::basis(i, field_); }

  /// Exhaustive associativity over basis triples and unit laws over the basis.
  Report validate() const;
  bool is_commutative() const;

  /// Structure constants and unit; labels and names are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  Field field_;
  std::vector<std::string> labels_;
  SparseVector unit_;
  std::vector<SparseVector> products_;
  std::string name_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Algebra opposite(const Algebra& a);
/// Basis = tuples of factor basis indices, leftmost factor slowest-varying.
Algebra tensor_algebras(std::span<const Algebra> factors);

// Standard small algebras used by fixtures and tests.
Algebra ground_algebra(Field field);
/// k[x]/(x^2) with basis {1, x}.
Algebra dual_numbers(Field field, const std::string& var = "x");
/// k x k with basis of orthogonal idempotents {e1, e2}; unit e1 + e2.
Algebra split_algebra(Field field);
/// M_n(k) with basis of matrix units e_ij in row-major order.
Algebra matrix_algebra(Field field, std::size_t n);

/// Linear map between algebras; columns are images of source basis vectors.
class AlgebraMorphism {
 public:
  AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, Matrix matrix);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  SparseVector apply(const SparseVector& v) const { return matrix_.apply(v); }

  /// Multiplicativity over basis pairs and unitality.
  Report validate() const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  Matrix matrix_;
};

/// The structure map k -> A.
AlgebraMorphism unit_inclusion(AlgebraPtr ground, AlgebraPtr target);

/// Checks that (A, B, eps) is a valid triple: B commutative, eps an algebra
/// morphism, and eps(B) inside the center of A.
Report check_epsilon(const AlgebraMorphism& eps);

/// A-bimodule given by action matrices: left(i) is m -> e_i m and right(i)
/// is m -> m e_i.
class Bimodule {
 public:
  Bimodule(AlgebraPtr over, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right,
           std::string name = "M");
  /// A as a bimodule over itself.
  static Bimodule regular(AlgebraPtr a);

  const AlgebraPtr& over() const { return over_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Field& field() const { return over_->field(); }
  const Matrix& left(std::size_t i) const { return left_.at(i); }
  const Matrix& right(std::size_t i) const { return right_.at(i); }

  SparseVector act_left(const SparseVector& a, const SparseVector& m) const;
  SparseVector act_right(const SparseVector& m, const SparseVector& a) const;

  /// Unital associative actions that commute with each other.
  Report validate() const;

 private:
  AlgebraPtr over_;
  std::size_t dim_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  std::string name_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

/// eps(b) m = m eps(b) for every basis b of B and m of M.
Report check_b_symmetric(const Bimodule& m, const AlgebraMorphism& eps);

}  // namespace simpres

#endif  // SIMPRES_ALGEBRA_HPP
