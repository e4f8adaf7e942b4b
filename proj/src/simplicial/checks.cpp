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

#include <string>

#include "simpres/simplicial.hpp"

namespace simpres {

namespace {

std::string at(std::size_t n, std::size_t i, std::size_t j, std::size_t basis) {
  return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
         " basis=" + std::to_string(basis);
}

std::string at(std::size_t n, std::size_t i, std::size_t basis) {
  return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " basis=" + std::to_string(basis);
}

std::string at_gen(std::size_t n, std::size_t i, std::size_t gen, std::size_t basis) {
  return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " generator=" +
         std::to_string(gen) + " basis=" + std::to_string(basis);
}

}  // namespace

SimplicialView view_of(const SimplicialAlgebra& a) {
  return {a.field(), [&a](std::size_t n) { return a.level_dim(n); },
          [&a](std::size_t n, std::size_t i, const SparseVector& v) {
            return a.face_vector(n, i, v);
          },
          [&a](std::size_t n, std::size_t i, const SparseVector& v) {
            return a.degeneracy_vector(n, i, v);
          }};
}

SimplicialView view_of(const SimplicialModule& m) {
  return {m.field(), [&m](std::size_t n) { return m.level_dim(n); },
          [&m](std::size_t n, std::size_t i, const SparseVector& v) { return m.face(n, i, v); },
          [&m](std::size_t n, std::size_t i, const SparseVector& v) {
            return m.degeneracy(n, i, v);
          }};
}

CosimplicialView view_of(const CosimplicialModule& m) {
  return {m.field(), [&m](std::size_t n) { return m.level_dim(n); },
          [&m](std::size_t n, std::size_t i, const SparseVector& v) { return m.coface(n, i, v); },
          [&m](std::size_t n, std::size_t i, const SparseVector& v) {
            return m.codegeneracy(n, i, v);
          }};
}

Report check_simplicial_identities(const SimplicialView& s, std::size_t up_to) {
  Report r;
  CheckOutcome& ff = r.family("delta_i delta_j = delta_{j-1} delta_i (i<j)");
  for (std::size_t n = 2; n <= up_to; ++n)
    for (std::size_t e = 0; e < s.dim(n); ++e) {
      SparseVector v = SparseVector::basis(e, s.field);
      std::vector<SparseVector> faces;
      for (std::size_t i = 0; i <= n; ++i) faces.push_back(s.face(n, i, v));
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          ff.expect(s.face(n - 1, i, faces[j]) == s.face(n - 1, j - 1, faces[i]),
                    [&] { return at(n, i, j, e); });
    }
  if (s.presimplicial) return r;

  CheckOutcome& ss = r.family("sigma_i sigma_j = sigma_{j+1} sigma_i (i<=j)");
  for (std::size_t n = 0; n + 1 <= up_to; ++n)
    for (std::size_t e = 0; e < s.dim(n); ++e) {
      SparseVector v = SparseVector::basis(e, s.field);
      std::vector<SparseVector> degs;
      for (std::size_t i = 0; i <= n; ++i) degs.push_back(s.degeneracy(n, i, v));
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          ss.expect(s.degeneracy(n + 1, i, degs[j]) == s.degeneracy(n + 1, j + 1, degs[i]),
                    [&] { return at(n, i, j, e); });
    }

  CheckOutcome& low = r.family("delta_i sigma_j = sigma_{j-1} delta_i (i<j)");
  CheckOutcome& id = r.family("delta_i sigma_j = id (i=j, i=j+1)");
  CheckOutcome& high = r.family("delta_i sigma_j = sigma_j delta_{i-1} (i>j+1)");
  for (std::size_t n = 0; n <= up_to; ++n)
    for (std::size_t e = 0; e < s.dim(n); ++e) {
      SparseVector v = SparseVector::basis(e, s.field);
      std::vector<SparseVector> faces;
      if (n > 0)
        for (std::size_t i = 0; i <= n; ++i) faces.push_back(s.face(n, i, v));
      for (std::size_t j = 0; j <= n; ++j) {
        SparseVector sj = s.degeneracy(n, j, v);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          SparseVector lhs = s.face(n + 1, i, sj);
          if (i < j)
            low.expect(lhs == s.degeneracy(n - 1, j - 1, faces[i]),
                       [&] { return at(n, i, j, e); });
          else if (i == j || i == j + 1)
            id.expect(lhs == v, [&] { return at(n, i, j, e); });
          else
            high.expect(lhs == s.degeneracy(n - 1, j, faces[i - 1]),
                        [&] { return at(n, i, j, e); });
        }
      }
    }
  return r;
}

Report check_simplicial_identities(const SimplicialAlgebra& a, std::size_t up_to) {
  return check_simplicial_identities(view_of(a), up_to);
}

Report check_simplicial_identities(const SimplicialModule& m, std::size_t up_to) {
  return check_simplicial_identities(view_of(m), up_to);
}

Report check_cosimplicial_identities(const CosimplicialView& c, std::size_t up_to) {
  Report r;
  CheckOutcome& ff = r.family("d^j d^i = d^i d^{j-1} (i<j)");
  for (std::size_t n = 0; n + 1 <= up_to; ++n)
    for (std::size_t e = 0; e < c.dim(n); ++e) {
      SparseVector v = SparseVector::basis(e, c.field);
      std::vector<SparseVector> cof;
      for (std::size_t i = 0; i <= n + 1; ++i) cof.push_back(c.coface(n, i, v));
      for (std::size_t j = 1; j <= n + 2; ++j)
        for (std::size_t i = 0; i < j; ++i)
          ff.expect(c.coface(n + 1, j, cof[i]) == c.coface(n + 1, i, cof[j - 1]),
                    [&] { return at(n, i, j, e); });
    }

  CheckOutcome& ss = r.family("s^j s^i = s^i s^{j+1} (i<=j)");
  for (std::size_t n = 0; n + 1 <= up_to; ++n)
    for (std::size_t e = 0; e < c.dim(n + 2); ++e) {
      SparseVector v = SparseVector::basis(e, c.field);
      std::vector<SparseVector> cod;
      for (std::size_t i = 0; i <= n + 1; ++i) cod.push_back(c.codegeneracy(n + 1, i, v));
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          ss.expect(c.codegeneracy(n, j, cod[i]) == c.codegeneracy(n, i, cod[j + 1]),
                    [&] { return at(n, i, j, e); });
    }

  CheckOutcome& low = r.family("s^j d^i = d^i s^{j-1} (i<j)");
  CheckOutcome& id = r.family("s^j d^i = id (i=j, i=j+1)");
  CheckOutcome& high = r.family("s^j d^i = d^{i-1} s^j (i>j+1)");
  for (std::size_t n = 0; n <= up_to; ++n)
    for (std::size_t e = 0; e < c.dim(n); ++e) {
      SparseVector v = SparseVector::basis(e, c.field);
      std::vector<SparseVector> cod;
      if (n > 0)
        for (std::size_t j = 0; j < n; ++j) cod.push_back(c.codegeneracy(n - 1, j, v));
      for (std::size_t i = 0; i <= n + 1; ++i) {
        SparseVector di = c.coface(n, i, v);
        for (std::size_t j = 0; j <= n; ++j) {
          SparseVector lhs = c.codegeneracy(n, j, di);
          if (i < j)
            low.expect(lhs == c.coface(n - 1, i, cod[j - 1]), [&] { return at(n, i, j, e); });
          else if (i == j || i == j + 1)
            id.expect(lhs == v, [&] { return at(n, i, j, e); });
          else
            high.expect(lhs == c.coface(n - 1, i - 1, cod[j]), [&] { return at(n, i, j, e); });
        }
      }
    }
  return r;
}

Report check_algebra_morphisms(const SimplicialAlgebra& a, std::size_t up_to) {
  Report r;
  CheckOutcome& unital = r.family("structure maps unital");
  CheckOutcome& mult = r.family("structure maps multiplicative");
  auto check_map = [&](std::size_t n, std::size_t i, std::size_t target, auto&& map) {
    const SlotSpace& src = a.level(n);
    const SlotSpace& dst = a.level(target);
    unital.expect(dst.expand(map(src.unit())) == dst.expand(dst.unit()),
                  [&] { return at(n, i, 0) + (target < n ? " face" : " degeneracy"); });
    const auto& gens = a.generators(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      PureTensor mg = map(gens[g]);
      for (std::size_t e = 0; e < src.dim(); ++e) {
        PureTensor be = src.pure_basis(e);
        mult.expect(dst.expand(map(src.multiply(gens[g], be))) ==
                        dst.expand(dst.multiply(mg, map(be))),
                    [&] {
                      return at_gen(n, i, g, e) + (target < n ? " face" : " degeneracy");
                    });
      }
    }
  };
  for (std::size_t n = 0; n <= up_to; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      if (n > 0)
        check_map(n, i, n - 1, [&](const PureTensor& x) {
          return x.empty() ? x : a.face(n, i, x);
        });
      check_map(n, i, n + 1, [&](const PureTensor& x) {
        return x.empty() ? x : a.degeneracy(n, i, x);
      });
    }
  return r;
}

Report check_module_action(const SimplicialModule& m, std::size_t up_to) {
  Report r;
  CheckOutcome& unit = r.family("unit acts as identity");
  CheckOutcome& assoc = r.family("action associative");
  const SimplicialAlgebra& a = *m.over();
  bool left = m.side() == Side::kLeft;
  for (std::size_t n = 0; n <= up_to; ++n) {
    const SlotSpace& alg = a.level(n);
    PureTensor one = alg.unit();
    for (std::size_t k = 0; k < m.level_dim(n); ++k)
      unit.expect(m.act(n, one, k) == SparseVector::basis(k, m.field()),
                  [&] { return at(n, 0, k); });
    const auto& gens = a.generators(n);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t e = 0; e < alg.dim(); ++e) {
        PureTensor be = alg.pure_basis(e);
        // left: (g e)·x = g·(e·x); right: x·(e g) = (x·e)·g
        PureTensor prod = left ? alg.multiply(gens[g], be) : alg.multiply(be, gens[g]);
        for (std::size_t k = 0; k < m.level_dim(n); ++k) {
          SparseVector lhs = prod.empty() ? SparseVector{} : m.act(n, prod, k);
          SparseVector rhs = m.act_vector(n, gens[g], m.act(n, be, k));
          assoc.expect(lhs == rhs, [&] {
            return "n=" + std::to_string(n) + " generator=" + std::to_string(g) +
                   " algebra basis=" + std::to_string(e) + " module basis=" + std::to_string(k);
          });
        }
      }
  }
  return r;
}

Report check_module_compatibility(const SimplicialModule& m, std::size_t up_to) {
  Report r;
  CheckOutcome& fc = r.family("delta_i(a·m) = delta_i(a)·delta_i(m)");
  CheckOutcome& dc = r.family("sigma_i(a·m) = sigma_i(a)·sigma_i(m)");
  const SimplicialAlgebra& a = *m.over();
  for (std::size_t n = 0; n <= up_to; ++n) {
    const auto& gens = a.generators(n);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t k = 0; k < m.level_dim(n); ++k) {
        SparseVector am = m.act(n, gens[g], k);
        for (std::size_t i = 0; i <= n; ++i) {
          if (n > 0) {
            PureTensor da = a.face(n, i, gens[g]);
            SparseVector rhs = da.empty() ? SparseVector{}
                                          : m.act_vector(n - 1, da, m.face_image(n, i, k));
            fc.expect(m.face(n, i, am) == rhs, [&] { return at_gen(n, i, g, k); });
          }
          PureTensor sa = a.degeneracy(n, i, gens[g]);
          SparseVector rhs = sa.empty() ? SparseVector{}
                                        : m.act_vector(n + 1, sa, m.degeneracy_image(n, i, k));
          dc.expect(m.degeneracy(n, i, am) == rhs, [&] { return at_gen(n, i, g, k); });
        }
      }
  }
  return r;
}

Report check_cosimplicial_compatibility(const CosimplicialModule& m, std::size_t up_to) {
  Report r;
  CheckOutcome& unit = r.family("unit acts as identity");
  CheckOutcome& assoc = r.family("action associative");
  CheckOutcome& fc = r.family("d^i(delta_i(a)·m) = a·d^i(m)");
  CheckOutcome& dc = r.family("s^i(sigma_i(a)·m) = a·s^i(m)");
  const SimplicialAlgebra& a = *m.over();
  for (std::size_t n = 0; n <= up_to; ++n) {
    const SlotSpace& alg = a.level(n);
    PureTensor one = alg.unit();
    const auto& gens = a.generators(n);
    for (std::size_t k = 0; k < m.level_dim(n); ++k) {
      unit.expect(m.act(n, one, k) == SparseVector::basis(k, m.field()),
                  [&] { return at(n, 0, k); });
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t e = 0; e < alg.dim(); ++e) {
          PureTensor be = alg.pure_basis(e);
          PureTensor prod = alg.multiply(gens[g], be);
          SparseVector lhs = prod.empty() ? SparseVector{} : m.act(n, prod, k);
          assoc.expect(lhs == m.act_vector(n, gens[g], m.act(n, be, k)),
                       [&] { return at_gen(n, e, g, k); });
        }
    }
    // Cofaces out of level n use generators of A_{n+1}.
    const auto& up_gens = a.generators(n + 1);
    for (std::size_t g = 0; g < up_gens.size(); ++g)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        PureTensor da = a.face(n + 1, i, up_gens[g]);
        for (std::size_t k = 0; k < m.level_dim(n); ++k) {
          SparseVector lhs = da.empty() ? SparseVector{}
                                        : m.coface(n, i, m.act(n, da, k));
          SparseVector rhs = m.act_vector(n + 1, up_gens[g], m.coface_image(n, i, k));
          fc.expect(lhs == rhs, [&] { return at_gen(n, i, g, k); });
        }
      }
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i <= n; ++i) {
        PureTensor sa = a.degeneracy(n, i, gens[g]);
        for (std::size_t k = 0; k < m.level_dim(n + 1); ++k) {
          SparseVector lhs = sa.empty() ? SparseVector{}
                                        : m.codegeneracy(n, i, m.act(n + 1, sa, k));
          SparseVector rhs = m.act_vector(n, gens[g], m.codegeneracy_image(n, i, k));
          dc.expect(lhs == rhs, [&] { return at_gen(n, i, g, k); });
        }
      }
  }
  return r;
}

}  // namespace simpres
