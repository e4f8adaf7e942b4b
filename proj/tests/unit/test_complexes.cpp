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
#include "simpres/complexes.hpp"
#include "simpres/oracles.hpp"
#include "test_support.hpp"

using namespace simpres;
using namespace simpres::testing;

namespace {

std::vector<std::size_t> table(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("oracle homology of standard algebras") {
  auto a = dual();
  CHECK(classical_hochschild_betti(*a, *regular(a), 4) == table({2, 1, 1, 1, 1}));
  auto s = split();
  CHECK(classical_hochschild_betti(*s, *regular(s), 4) == table({2, 0, 0, 0, 0}));
  auto m = mat2();
  CHECK(classical_hochschild_betti(*m, *regular(m), 2) == table({1, 0, 0}));
  auto k = ground();
  CHECK(classical_hochschild_betti(*k, *regular(k), 3) == table({1, 0, 0, 0}));
}

TEST_CASE("oracle cohomology of standard algebras") {
  auto a = dual();
  CHECK(classical_hochschild_cobetti(*a, *regular(a), 3) == table({2, 1, 1, 1}));
  auto m = mat2();
  CHECK(classical_hochschild_cobetti(*m, *regular(m), 2) == table({1, 0, 0}));
  auto k = ground();
  CHECK(classical_hochschild_cobetti(*k, *regular(k), 2) == table({1, 0, 0}));
}

TEST_CASE("oracle complexes square to zero") {
  auto a = dual();
  for (auto m : {regular(a), twisted_dual(a)}) {
    CHECK(classical_hochschild_complex(*a, *m, 5).verify_square_zero() == 4);
    CHECK(classical_hochschild_cocomplex(*a, *m, 5).verify_square_zero() == 4);
  }
}

TEST_CASE("dimension formulas") {
  CHECK(secondary_dimension_formula(2, 2, 2, 0) == 2);
  CHECK(secondary_dimension_formula(2, 2, 2, 2) == 16);
  CHECK(secondary_dimension_formula(2, 2, 2, 3) == 128);
  for (std::size_t n = 0; n < 5; ++n)
    CHECK(secondary_dimension_formula(3, 2, 1, n) == classical_dimension(3, 2, n));
}

TEST_CASE("Hochschild tensor levels match the classical dimensions") {
  for (auto a : {dual(), split(), mat2()}) {
    auto env = env_algebra(a);
    TensorLevels t(coefficient_right_module(regular(a), env), bar_module(env));
    for (std::size_t n = 0; n <= 3; ++n)
      CHECK(t.dim(n) == classical_dimension(a->dim(), a->dim(), n));
  }
}

TEST_CASE("tensor and Hom pipelines match the oracles") {
  auto a = dual();
  auto env = env_algebra(a);
  TensorLevels t(coefficient_right_module(regular(a), env), bar_module(env));
  ChainComplex c = to_chain_complex(t, 5);
  CHECK(c.verified_compositions() == 4);
  CHECK(c.betti_table(4) == table({2, 1, 1, 1, 1}));

  HomLevels h(bar_module(env), constant_cosimplicial_module(regular(a), env));
  for (std::size_t n = 0; n <= 3; ++n) CHECK(h.dim(n) == classical_dimension(2, 2, n));
  ChainComplex cc = to_cochain_complex(h, 4);
  CHECK(cc.betti_table(3) == table({2, 1, 1, 1}));

  auto m = mat2();
  auto menv = env_algebra(m);
  TensorLevels tm(coefficient_right_module(regular(m), menv), bar_module(menv));
  CHECK(to_chain_complex(tm, 3).betti_table(2) == table({1, 0, 0}));
  HomLevels hm(bar_module(menv), constant_cosimplicial_module(regular(m), menv));
  CHECK(to_cochain_complex(hm, 3).betti_table(2) == table({1, 0, 0}));

  auto twisted = twisted_dual(a);
  TensorLevels tt(coefficient_right_module(twisted, env), bar_module(env));
  CHECK(to_chain_complex(tt, 4).betti_table(3) ==
        classical_hochschild_betti(*a, *twisted, 3));
  HomLevels ht(bar_module(env), constant_cosimplicial_module(twisted, env));
  CHECK(to_cochain_complex(ht, 4).betti_table(3) ==
        classical_hochschild_cobetti(*a, *twisted, 3));
}

TEST_CASE("tensor levels form a simplicial vector space") {
  auto a = dual();
  auto env = env_algebra(a);
  TensorLevels t(coefficient_right_module(regular(a), env), bar_module(env));
  CHECK(check_simplicial_identities(t.view(), 3).ok());
  HomLevels h(bar_module(env), constant_cosimplicial_module(regular(a), env));
  CHECK(check_cosimplicial_identities(h.view(), 2).ok());
}

TEST_CASE("generator relations span the full relations") {
  auto a = dual();
  auto sec = secondary_algebra(dual_eps(a));
  auto x = coefficient_right_module(regular(a), sec);
  auto y = secondary_bar_module(sec);
  TensorLevels gens(x, y), full(x, y, TensorLevels::Relations::kFullBasis);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(gens.dim(n) == full.dim(n));
}

TEST_CASE("Hom of the regular module is evaluation at the unit") {
  auto a = dual();
  auto sec = secondary_algebra(dual_eps(a));
  HomLevels h(std::make_shared<const RegularModule>(sec),
              constant_cosimplicial_module(regular(a), sec));
  for (std::size_t n = 0; n <= 2; ++n) CHECK(h.dim(n) == 2);
}

TEST_CASE("secondary levels follow the dimension formula") {
  auto a = dual();
  auto sec = secondary_algebra(dual_eps(a));
  TensorLevels t(coefficient_right_module(regular(a), sec), secondary_bar_module(sec));
  for (std::size_t n = 0; n <= 2; ++n)
    CHECK(t.dim(n) == secondary_dimension_formula(2, 2, 2, n));
  ChainComplex c = to_chain_complex(t, 2);
  CHECK(c.verified_compositions() == 1);
}

TEST_CASE("secondary pipeline with B = k reproduces Hochschild homology") {
  auto a = dual();
  auto sec = secondary_algebra(ground_eps(a));
  TensorLevels t(coefficient_right_module(regular(a), sec), secondary_bar_module(sec));
  CHECK(to_chain_complex(t, 4).betti_table(3) == table({2, 1, 1, 1}));
}

TEST_CASE("chain complex basics") {
  ChainComplex zero(ChainComplex::Direction::kChain, {0, 0, 0},
                    {Matrix(0, 0, Q()), Matrix(0, 0, Q())}, Q());
  CHECK(zero.betti_table(1) == table({0, 0}));
  ChainComplex flat(ChainComplex::Direction::kChain, {2, 3, 1},
                    {Matrix(2, 3, Q()), Matrix(3, 1, Q())}, Q());
  CHECK(flat.betti_table(1) == table({2, 3}));
  CHECK_THROWS_AS(flat.betti(2), ValidationError);
  Matrix one = Matrix::identity(1, Q());
  CHECK_THROWS_AS(ChainComplex(ChainComplex::Direction::kChain, {1, 1, 1}, {one, one}, Q()),
                  ConstructionError);
}

TEST_CASE("ambient cap refuses large levels") {
  auto a = dual();
  auto sec = secondary_algebra(dual_eps(a));
  TensorLevels t(coefficient_right_module(regular(a), sec), secondary_bar_module(sec),
                 TensorLevels::Relations::kGenerators, 1000);
  CHECK(t.dim(1) == 4);
  CHECK_THROWS_AS(t.dim(2), InfeasibleError);
}

TEST_CASE("secondary level three") {
  auto a = dual();
  auto sec = secondary_algebra(dual_eps(a));
  TensorLevels t(coefficient_right_module(regular(a), sec), secondary_bar_module(sec));
  CHECK(t.dim(3) == secondary_dimension_formula(2, 2, 2, 3));
  ChainComplex c = to_chain_complex(t, 3);
  CHECK(c.verified_compositions() == 2);
}
