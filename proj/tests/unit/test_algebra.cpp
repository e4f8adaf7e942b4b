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

#include "doctest.h"
#include "simpres/algebra.hpp"
#include "test_support.hpp"

using namespace simpres;
using namespace simpres::testing;

TEST_CASE("multiplication examples") {
  auto a = dual();
  CHECK(a->multiply(a->basis(1), a->basis(1)).empty());
  SparseVector v = vec({3, -2});
  CHECK(a->multiply(a->unit(), v) == v);
  CHECK(a->multiply(v, a->unit()) == v);
  auto m = mat2();
  // e12 * e21 = e11 with row-major basis e11, e12, e21, e22
  CHECK(m->multiply(m->basis(1), m->basis(2)) == m->basis(0));
  CHECK_THROWS_AS(a->multiply(a->basis(0), vec({0, 0, 1})), ValidationError);
}

TEST_CASE("standard algebras validate") {
  for (auto a : {dual(), split(), ground(), mat2(), dual(Field::prime(3))}) {
    Report r = a->validate();
    CHECK(r.ok());
  }
  CHECK(dual()->is_commutative());
  CHECK(!mat2()->is_commutative());
}

TEST_CASE("opposite") {
  CHECK(opposite(*dual()) == *dual());
  Algebra op = opposite(*mat2());
  // e12 ∘op e21 = e21 e12 = e22
  CHECK(op.multiply(op.basis(1), op.basis(2)) == op.basis(3));
  CHECK(opposite(op) == *mat2());
}

TEST_CASE("tensor products") {
  std::vector<Algebra> two{*dual(), *dual()};
  Algebra t = tensor_algebras(two);
  CHECK(t.dim() == 4);
  // (1⊗x)(x⊗1) = x⊗x, indices: 1⊗x = 1, x⊗1 = 2, x⊗x = 3
  CHECK(t.multiply(t.basis(1), t.basis(2)) == t.basis(3));
  CHECK(t.validate().ok());

  std::vector<Algebra> ab{*dual(), *split()};
  std::vector<Algebra> left_first{tensor_algebras(ab), *mat2()};
  std::vector<Algebra> bc{*split(), *mat2()};
  std::vector<Algebra> right_first{*dual(), tensor_algebras(bc)};
  CHECK(tensor_algebras(left_first) == tensor_algebras(right_first));
}

TEST_CASE("associativity violations name the triple") {
  Field f = Q();
  // 1*x = 0 breaks the unit law, and then (xx)x = 1 + x while x(xx) = 1 + 2x.
  std::vector<SparseVector> products{vec({1, 0}), vec({0, 0}), vec({0, 1}), vec({1, 1})};
  Algebra bad(f, {"1", "x"}, vec({1, 0}), products, "bad");
  Report r = bad.validate();
  CHECK(!r.ok());
  bool named = false;
  for (const auto& line : r.failure_lines())
    if (line.find("(") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("epsilon validation") {
  auto a = dual();
  CHECK(check_epsilon(*ground_eps(a)).ok());
  CHECK(check_epsilon(*dual_eps(a)).ok());

  // A = M2(k), B = k[y]/y^2, eps(y) = e12 is not central.
  auto m = mat2();
  auto b = std::make_shared<const Algebra>(dual_numbers(Q(), "y"));
  std::vector<Matrix::Triplet> t{{0, 0, q(1)}, {3, 0, q(1)}, {1, 1, q(1)}};
  AlgebraMorphism eps(b, m, Matrix::from_triplets(4, 2, t, Q()));
  Report r = check_epsilon(eps);
  CHECK(!r.ok());
  bool central_failed = false;
  for (const auto& fam : r.families())
    if (fam.name == "epsilon image central" && !fam.ok()) central_failed = true;
  CHECK(central_failed);

  // Noncommutative B is rejected.
  auto id = std::make_shared<const AlgebraMorphism>(m, m, Matrix::identity(4, Q()));
  CHECK(!check_epsilon(*id).ok());
}

TEST_CASE("B-symmetry") {
  auto a = dual();
  CHECK(check_b_symmetric(*regular(a), *dual_eps(a)).ok());
  CHECK(check_b_symmetric(*twisted_dual(a), *ground_eps(a)).ok());
  CHECK(!check_b_symmetric(*twisted_dual(a), *dual_eps(a)).ok());
}

TEST_CASE("bimodules validate") {
  auto a = dual();
  CHECK(regular(a)->validate().ok());
  CHECK(twisted_dual(a)->validate().ok());
  CHECK(regular(mat2())->validate().ok());
}
