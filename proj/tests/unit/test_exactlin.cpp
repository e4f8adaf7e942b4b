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

#include <random>

#include "doctest.h"
#include "simpres/linalg.hpp"
#include "test_support.hpp"

using namespace simpres;
using namespace simpres::testing;

namespace {

Matrix dense(std::vector<std::vector<std::int64_t>> rows, Field f = Q()) {
  std::vector<std::vector<Scalar>> s;
  for (auto& r : rows) {
    s.emplace_back();
    for (auto x : r) s.back().push_back(f.from_int(x));
  }
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return Matrix::from_dense(s, cols, f);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Field f, int density) {
  std::uniform_int_distribution<int> coin(0, 99), val(-3, 3);
  std::vector<Matrix::Triplet> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) t.emplace_back(i, j, f.from_int(val(rng)));
  return Matrix::from_triplets(r, c, std::move(t), f);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK((q(2, 4)).to_string() == "1/2");
  CHECK((q(-3, 6) * q(2, 1)).to_string() == "-1");
  CHECK(q(1, 3).inverse() == q(3));
  CHECK_THROWS_AS(q(0).inverse(), DomainError);
}

TEST_CASE("rationals promote to big integers and demote back") {
  Scalar big = q(1);
  for (int k = 0; k < 5; ++k) big *= q(1'000'000'007);
  CHECK(big.to_string() == "1000000035000000490000003430000012005000016807");
  Scalar back = big;
  for (int k = 0; k < 5; ++k) back /= q(1'000'000'007);
  CHECK(back == q(1));
  CHECK(back.is_one());
  Scalar frac = q(1, 3).pow(50) * q(3).pow(50);
  CHECK(frac.is_one());
}

TEST_CASE("scalar strings round-trip") {
  for (const char* s : {"0", "-7", "3/4", "-22/7", "123456789012345678901234567891/7"}) {
    Scalar x = Q().parse(s);
    CHECK(Q().parse(x.to_string()) == x);
    CHECK(x.to_string() == s);
  }
  CHECK(Q().parse("4/6").to_string() == "2/3");
  CHECK_THROWS_AS(Q().parse("1/0"), ParseError);
  CHECK_THROWS_AS(Q().parse("1.5"), ParseError);
  CHECK_THROWS_AS(Q().parse(""), ParseError);
  CHECK_THROWS_AS(Q().parse("/3"), ParseError);
}

TEST_CASE("prime field arithmetic satisfies x^p = x") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u}) {
    Field f = Field::prime(p);
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(p); ++v) {
      Scalar x = f.from_int(v);
      CHECK(x.pow(p) == x);
      if (v != 0) CHECK(x * x.inverse() == f.one());
    }
  }
  Field f7 = Field::prime(7);
  CHECK(f7.parse("3/5").to_string() == "2");
  CHECK(f7.from_int(-1).to_string() == "6");
  CHECK_THROWS_AS(Field::prime(8), ValidationError);
  CHECK_THROWS_AS(f7.parse("1/7"), ParseError);
  CHECK_THROWS_AS(f7.one() + Q().one(), DomainError);
}

TEST_CASE("rank examples") {
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::identity(5, Q())) == 5);
  CHECK(rank(Matrix(3, 4, Q())) == 0);
}

TEST_CASE("kernel examples") {
  Subspace k1 = kernel_basis(dense({{1, 1}}));
  REQUIRE(k1.dim() == 1);
  CHECK(dense({{1, 1}}).apply(k1.basis()[0]).empty());
  CHECK(kernel_basis(Matrix::identity(3, Q())).dim() == 0);
  Matrix m = dense({{1, 2}, {2, 4}});
  Subspace k2 = kernel_basis(m);
  REQUIRE(k2.dim() == 1);
  CHECK(m.apply(k2.basis()[0]).empty());
  const SparseVector& v = k2.basis()[0];
  // proportional to (2, -1)
  CHECK(v.size() == 2);
  CHECK(v[0].second == v[1].second * q(-2));
  CHECK(solve_linear_constraints(m).basis() == k2.basis());
}

TEST_CASE("quotient examples") {
  std::vector<SparseVector> r1{vec({1, -1})};
  QuotientSpace a = quotient_by(2, r1, Q());
  CHECK(a.dim() == 1);
  CHECK(a.project(r1[0]).empty());

  QuotientSpace b = quotient_by(4, {}, Q());
  CHECK(b.projection == Matrix::identity(4, Q()));

  std::vector<SparseVector> r3{vec({1, 0, 0}), vec({1, 1, 0})};
  QuotientSpace c = quotient_by(3, r3, Q());
  CHECK(c.dim() == 1);
  CHECK(c.relations.dim() == 2);
}

TEST_CASE("rank-nullity and quotient laws on random matrices") {
  std::mt19937 rng(20261019);
  for (Field f : {Q(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix m = random_matrix(rng, r, c, f, 45);
      Subspace k = kernel_basis(m);
      CHECK(rank(m) + k.dim() == c);
      for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
      // echelon invariant: strictly increasing pivots, independent rows
      for (std::size_t p = 1; p < k.pivots().size(); ++p) CHECK(k.pivots()[p - 1] < k.pivots()[p]);
      CHECK(span_of(c, k.basis(), f).dim() == k.dim());

      auto rows = m.row_vectors();
      QuotientSpace qs = quotient_by(c, rows, f);
      CHECK(qs.dim() == c - rank(m));
      CHECK(qs.projection * qs.section == Matrix::identity(qs.dim(), f));
      for (const auto& row : rows) CHECK(qs.project(row).empty());
      for (const auto& rel : qs.relations.basis()) CHECK(qs.project(rel).empty());
    }
  }
}

TEST_CASE("pivot rules agree on rank and row space") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 6, 8, Q(), 40);
    RowReducer a(8, Q(), PivotRule::kSmallestEntry), b(8, Q(), PivotRule::kLeftmost);
    for (const auto& row : m.row_vectors()) {
      a.add(row);
      b.add(row);
    }
    CHECK(a.rank() == b.rank());
    Subspace sa = a.to_subspace(), sb = b.to_subspace();
    for (const auto& v : sa.basis()) CHECK(sb.contains(v));
    for (const auto& v : sb.basis()) CHECK(sa.contains(v));
  }
}

TEST_CASE("matrix algebra") {
  Matrix a = dense({{1, 2}, {0, 1}});
  Matrix b = dense({{0, 1}, {1, 0}});
  CHECK(a * b == dense({{2, 1}, {1, 0}}));
  CHECK((a + b) - b == a);
  CHECK(a.transposed().transposed() == a);
  CHECK(a.entry(0, 1) == q(2));
  CHECK(a.nnz() == 3);
  Matrix c = a;
  c.set_entry(0, 1, q(0));
  CHECK(c.nnz() == 2);
  CHECK(kron(vec({1, 2}), vec({0, 3}), 2) == vec({0, 3, 0, 6}));
}
