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

#ifndef SIMPRES_DOCUMENT_HPP
#define SIMPRES_DOCUMENT_HPP

// JSON input documents: field, algebras, an optional triple (A, B, eps),
// bimodules and an optional homotopy instance.

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "simpres/homotopy.hpp"

namespace simpres {

struct Triple {
  AlgebraPtr a;
  AlgebraPtr b;
  std::shared_ptr<const AlgebraMorphism> eps;
};

struct Document {
  std::string name;
  Field field;
  /// Keyed by name, in name order.
  std::map<std::string, AlgebraPtr> algebras;
  /// The algebra used by the Hochschild theory.
  std::string primary = "A";
  std::optional<Triple> triple;
  std::map<std::string, BimodulePtr> bimodules;
  /// Default coefficient bimodule; "regular" is A over itself.
  std::string coefficients = "regular";
  std::optional<std::size_t> max_degree;
  /// Kept unresolved; it is built against a concrete bar module per run.
  std::optional<nlohmann::json> homotopy;

  const AlgebraPtr& primary_algebra() const;
  /// The named bimodule, or A over itself for "regular". Throws
  /// ValidationError if the bimodule is not over `over`.
  BimodulePtr coefficient_bimodule(const std::string& name, const AlgebraPtr& over) const;
};

/// Throws ParseError on malformed JSON, missing fields or bad scalars, and
/// ValidationError on inconsistent dimensions.
Document parse_document(const std::string& text, const std::string& name);
Document load_document(const std::string& path);

Scalar parse_scalar(const nlohmann::json& j, const Field& f);
SparseVector parse_vector(const nlohmann::json& j, std::size_t dim, const Field& f);
/// Dense rows, or {"rows", "cols", "entries": [[i, j, v], ...]}.
Matrix parse_matrix(const nlohmann::json& j, std::size_t rows, std::size_t cols, const Field& f);

/// Builds f, g, h, t against the bar module `m`. Morphisms are produced
/// through degree top + 1 and homotopies through top.
HomotopyEquivalence build_equivalence(const nlohmann::json& block,
                                      std::shared_ptr<const BarLikeModule> m, std::size_t top);

}  // namespace simpres

#endif  // SIMPRES_DOCUMENT_HPP
