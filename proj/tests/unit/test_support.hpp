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

// Shared fixtures for the unit tests.

#ifndef SIMPRES_TEST_SUPPORT_HPP
#define SIMPRES_TEST_SUPPORT_HPP

#include <memory>
#include <string>

#include "simpres/algebra.hpp"

namespace simpres::testing {

inline Field Q() { return Field::rationals(); }

inline Scalar q(std::int64_t n, std::int64_t d = 1) { return Q().from_fraction(n, d); }

inline SparseVector vec(std::initializer_list<std::int64_t> dense, Field f = Q()) {
  SparseVector v;
  std::size_t i = 0;
  for (auto x : dense) {
    if (x != 0) v.push_back(i, f.from_int(x));
    ++i;
  }
  return v;
}

inline AlgebraPtr dual(Field f = Q()) { return std::make_shared<const Algebra>(dual_numbers(f)); }
inline AlgebraPtr split(Field f = Q()) {
  return std::make_shared<const Algebra>(split_algebra(f));
}
inline AlgebraPtr ground(Field f = Q()) {
  return std::make_shared<const Algebra>(ground_algebra(f));
}
inline AlgebraPtr mat2(Field f = Q()) {
  return std::make_shared<const Algebra>(matrix_algebra(f, 2));
}

/// eps: k[y]/y^2 -> k[x]/x^2, y -> x.
inline std::shared_ptr<const AlgebraMorphism> dual_eps(AlgebraPtr a) {
  auto b = std::make_shared<const Algebra>(dual_numbers(a->field(), "y"));
  Matrix m = Matrix::identity(2, a->field());
  return std::make_shared<const AlgebraMorphism>(b, a, m);
}

/// eps: k -> A, the unit inclusion.
inline std::shared_ptr<const AlgebraMorphism> ground_eps(AlgebraPtr a) {
  return std::make_shared<const AlgebraMorphism>(unit_inclusion(ground(a->field()), a));
}

/// eps = identity of an algebra onto itself (B = A, needs A commutative).
inline std::shared_ptr<const AlgebraMorphism> identity_eps(AlgebraPtr a) {
  return std::make_shared<const AlgebraMorphism>(a, a, Matrix::identity(a->dim(), a->field()));
}

inline BimodulePtr regular(AlgebraPtr a) {
  return std::make_shared<const Bimodule>(Bimodule::regular(std::move(a)));
}

/// k[x]/x^2 with the usual left action and right action twisted by x -> -x.
inline BimodulePtr twisted_dual(AlgebraPtr a) {
  Field f = a->field();
  Bimodule reg = Bimodule::regular(a);
  std::vector<Matrix> left{reg.left(0), reg.left(1)};
  std::vector<Matrix> right{reg.right(0), reg.right(1).scaled(f.from_int(-1))};
  return std::make_shared<const Bimodule>(a, 2, left, right, "M_twisted");
}

}  // namespace simpres::testing

#endif  // SIMPRES_TEST_SUPPORT_HPP
