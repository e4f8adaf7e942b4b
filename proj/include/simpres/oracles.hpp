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

#ifndef SIMPRES_ORACLES_HPP
#define SIMPRES_ORACLES_HPP

// Classical Hochschild complexes built directly from structure constants.
// They share only the exact linear algebra with the simplicial pipeline.

#include <cstddef>
#include <vector>

#include "simpres/algebra.hpp"

namespace simpres {

struct ClassicalComplex {
  bool cochain = false;
  /// dims[n] = dim M * (dim A)^n
  std::vector<std::size_t> dims;
  /// chain: boundaries[k] = b_{k+1} : C_{k+1} -> C_k;
  /// cochain: boundaries[k] = delta^k : C^k -> C^{k+1}
  std::vector<Matrix> boundaries;

  /// Number of verified d∘d products; throws ConstructionError if one is nonzero.
  std::size_t verify_square_zero() const;
  /// Degrees 0..dims.size()-2.
  std::vector<std::size_t> betti() const;
};

/// M ⊗ A^{⊗n}, n = 0..top, with
/// b(m ⊗ a_1..a_n) = m a_1 ⊗ a_2.. + sum_i (-1)^i m ⊗ ..a_i a_{i+1}.. + (-1)^n a_n m ⊗ a_1..a_{n-1}.
ClassicalComplex classical_hochschild_complex(const Algebra& a, const Bimodule& m,
                                              std::size_t top);
/// Hom_k(A^{⊗n}, M), phi[t * dim M + m] = coefficient of e_m in phi(e_t), with
/// (delta phi)(a_1..a_{n+1}) = a_1 phi(a_2..) + sum_i (-1)^i phi(..a_i a_{i+1}..)
///                            + (-1)^{n+1} phi(a_1..a_n) a_{n+1}.
ClassicalComplex classical_hochschild_cocomplex(const Algebra& a, const Bimodule& m,
                                                std::size_t top);

std::vector<std::size_t> classical_hochschild_betti(const Algebra& a, const Bimodule& m,
                                                    std::size_t up_to);
std::vector<std::size_t> classical_hochschild_cobetti(const Algebra& a, const Bimodule& m,
                                                      std::size_t up_to);

/// (dim M)(dim A)^n
std::size_t classical_dimension(std::size_t dim_m, std::size_t dim_a, std::size_t n);
/// (dim M)(dim A)^n (dim B)^{n(n-1)/2}
std::size_t secondary_dimension_formula(std::size_t dim_m, std::size_t dim_a, std::size_t dim_b,
                                        std::size_t n);

}  // namespace simpres

#endif  // SIMPRES_ORACLES_HPP
