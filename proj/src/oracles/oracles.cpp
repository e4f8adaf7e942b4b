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

#include "simpres/oracles.hpp"

#include <string>

#include "simpres/linalg.hpp"

namespace simpres {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < e; ++k)
    if (__builtin_mul_overflow(r, base, &r)) throw InfeasibleError("dimension overflows size_t");
  return r;
}

/// Digits of t in base d, most significant first, length n.
std::vector<std::size_t> digits_of(std::size_t t, std::size_t d, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = t % d;
    t /= d;
  }
  return out;
}

/// All index-coefficient pairs of the tensor a_0 ⊗ ... ⊗ a_{k-1} where each
/// factor is a coordinate vector in dimension d.
std::vector<SparseVector::Entry> expand(const std::vector<SparseVector>& factors, std::size_t d,
                                        const Field& f) {
  std::vector<SparseVector::Entry> cur{{0, f.one()}};
  for (const auto& v : factors) {
    std::vector<SparseVector::Entry> next;
    for (const auto& [i, x] : cur)
      for (const auto& [j, y] : v) next.emplace_back(i * d + j, x * y);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::size_t classical_dimension(std::size_t dim_m, std::size_t dim_a, std::size_t n) {
  return dim_m * ipow(dim_a, n);
}

std::size_t secondary_dimension_formula(std::size_t dim_m, std::size_t dim_a, std::size_t dim_b,
                                        std::size_t n) {
  return dim_m * ipow(dim_a, n) * ipow(dim_b, n * (n - 1) / 2);
}

ClassicalComplex classical_hochschild_complex(const Algebra& a, const Bimodule& m,
                                              std::size_t top) {
  const Field& f = a.field();
  const std::size_t da = a.dim(), dm = m.dim();
  ClassicalComplex c;
  for (std::size_t n = 0; n <= top; ++n) c.dims.push_back(classical_dimension(dm, da, n));
  for (std::size_t n = 1; n <= top; ++n) {
    const std::size_t tails = ipow(da, n), out_tails = ipow(da, n - 1);
    std::vector<SparseVector> cols;
    cols.reserve(c.dims[n]);
    for (std::size_t idx = 0; idx < c.dims[n]; ++idx) {
      std::size_t mi = idx / tails;
      std::vector<std::size_t> t = digits_of(idx % tails, da, n);
      SparseVector em = SparseVector::basis(mi, f);
      std::vector<SparseVector::Entry> acc;
      auto add_term = [&](const SparseVector& mv, const std::vector<SparseVector>& rest,
                          const Scalar& sign) {
        auto tail = expand(rest, da, f);
        for (const auto& [mm, x] : mv)
          for (const auto& [tt, y] : tail) acc.emplace_back(mm * out_tails + tt, sign * x * y);
      };
      std::vector<SparseVector> basis_tail;
      for (std::size_t k = 0; k < n; ++k) basis_tail.push_back(a.basis(t[k]));
      // m a_1 ⊗ a_2 .. a_n
      add_term(m.act_right(em, basis_tail[0]),
               std::vector<SparseVector>(basis_tail.begin() + 1, basis_tail.end()), f.one());
      // inner products
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<SparseVector> rest;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i - 1) rest.push_back(a.multiply(basis_tail[k], basis_tail[k + 1]));
          else if (k != i) rest.push_back(basis_tail[k]);
        }
        add_term(em, rest, i % 2 ? -f.one() : f.one());
      }
      // a_n m ⊗ a_1 .. a_{n-1}
      add_term(m.act_left(basis_tail[n - 1], em),
               std::vector<SparseVector>(basis_tail.begin(), basis_tail.end() - 1),
               n % 2 ? -f.one() : f.one());
      cols.push_back(SparseVector::from_unsorted(std::move(acc)));
    }
    c.boundaries.push_back(Matrix::from_columns(c.dims[n - 1], std::move(cols), f));
  }
  return c;
}

ClassicalComplex classical_hochschild_cocomplex(const Algebra& a, const Bimodule& m,
                                                std::size_t top) {
  const Field& f = a.field();
  const std::size_t da = a.dim(), dm = m.dim();
  ClassicalComplex c;
  c.cochain = true;
  for (std::size_t n = 0; n <= top; ++n) c.dims.push_back(classical_dimension(dm, da, n));
  // The coboundary is assembled row by row: (delta phi)(t) for each tuple t of
  // length n+1 and output coordinate, as a linear functional in phi.
  for (std::size_t n = 0; n < top; ++n) {
    const std::size_t out_tuples = ipow(da, n + 1);
    std::vector<Matrix::Triplet> trip;
    for (std::size_t t = 0; t < out_tuples; ++t) {
      std::vector<std::size_t> d = digits_of(t, da, n + 1);
      std::vector<SparseVector> args;
      for (std::size_t k = 0; k <= n; ++k) args.push_back(a.basis(d[k]));
      // a_1 phi(a_2 .. a_{n+1}): column (s, mi) contributes a_1 e_mi at row (t, .)
      {
        auto tail = expand(std::vector<SparseVector>(args.begin() + 1, args.end()), da, f);
        for (const auto& [s, x] : tail)
          for (std::size_t mi = 0; mi < dm; ++mi)
            for (const auto& [mo, y] : m.act_left(args[0], SparseVector::basis(mi, f)))
              trip.emplace_back(t * dm + mo, s * dm + mi, x * y);
      }
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<SparseVector> merged;
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == i - 1) merged.push_back(a.multiply(args[k], args[k + 1]));
          else if (k != i) merged.push_back(args[k]);
        }
        Scalar sign = i % 2 ? -f.one() : f.one();
        for (const auto& [s, x] : expand(merged, da, f))
          for (std::size_t mi = 0; mi < dm; ++mi)
            trip.emplace_back(t * dm + mi, s * dm + mi, sign * x);
      }
      {
        Scalar sign = (n + 1) % 2 ? -f.one() : f.one();
        auto head = expand(std::vector<SparseVector>(args.begin(), args.end() - 1), da, f);
        for (const auto& [s, x] : head)
          for (std::size_t mi = 0; mi < dm; ++mi)
            for (const auto& [mo, y] : m.act_right(SparseVector::basis(mi, f), args[n]))
              trip.emplace_back(t * dm + mo, s * dm + mi, sign * x * y);
      }
    }
    c.boundaries.push_back(
        Matrix::from_triplets(c.dims[n + 1], c.dims[n], std::move(trip), f));
  }
  return c;
}

std::size_t ClassicalComplex::verify_square_zero() const {
  std::size_t verified = 0;
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k) {
    Matrix dd = cochain ? boundaries[k + 1] * boundaries[k] : boundaries[k] * boundaries[k + 1];
    if (!dd.is_zero())
      throw ConstructionError("classical complex: d∘d is not zero at position " +
                              std::to_string(k));
    ++verified;
  }
  return verified;
}

std::vector<std::size_t> ClassicalComplex::betti() const {
  std::vector<std::size_t> ranks;
  for (const auto& b : boundaries) ranks.push_back(rank(b));
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
    std::size_t in = cochain ? (n == 0 ? 0 : ranks[n - 1]) : ranks[n];
    std::size_t outgoing = cochain ? ranks[n] : (n == 0 ? 0 : ranks[n - 1]);
    out.push_back(dims[n] - in - outgoing);
  }
  return out;
}

std::vector<std::size_t> classical_hochschild_betti(const Algebra& a, const Bimodule& m,
                                                    std::size_t up_to) {
  ClassicalComplex c = classical_hochschild_complex(a, m, up_to + 1);
  c.verify_square_zero();
  return c.betti();
}

std::vector<std::size_t> classical_hochschild_cobetti(const Algebra& a, const Bimodule& m,
                                                      std::size_t up_to) {
  ClassicalComplex c = classical_hochschild_cocomplex(a, m, up_to + 1);
  c.verify_square_zero();
  return c.betti();
}

}  // namespace simpres
