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

#include "simpres/document.hpp"

#include <fstream>
#include <sstream>

#include "simpres/errors.hpp"

namespace simpres {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + " is missing \"" + key + "\"");
  return *it;
}

std::size_t need_size(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(where + "." + key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

const json& need_array(const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  if (j.size() != size)
    throw ValidationError(where + " has " + std::to_string(j.size()) + " entries, expected " +
                          std::to_string(size));
  return j;
}

Field parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
    return Field::prime(j["Fp"].get<std::uint64_t>());
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

AlgebraPtr parse_algebra(const std::string& name, const json& j, const Field& f) {
  std::string where = "algebra " + name;
  std::size_t dim = need_size(j, "dim", where);
  if (dim == 0) throw ValidationError(where + " must have positive dimension");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : need_array(j["labels"], dim, where + ".labels")) {
      if (!l.is_string()) throw ParseError(where + ".labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  SparseVector unit = parse_vector(need(j, "unit", where), dim, f);
  const json& rows = need_array(need(j, "products", where), dim, where + ".products");
  std::vector<SparseVector> products;
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = need_array(rows[i], dim, where + ".products[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < dim; ++k) products.push_back(parse_vector(row[k], dim, f));
  }
  return std::make_shared<const Algebra>(f, std::move(labels), std::move(unit),
                                         std::move(products), name);
}

const AlgebraPtr& lookup(const std::map<std::string, AlgebraPtr>& algebras,
                         const std::string& name, const std::string& where) {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw ValidationError(where + " refers to unknown algebra " + name);
  return it->second;
}

BimodulePtr parse_bimodule(const std::string& name, const json& j,
                           const std::map<std::string, AlgebraPtr>& algebras, const Field& f) {
  std::string where = "bimodule " + name;
  const AlgebraPtr& a = lookup(algebras, need_string(j, "algebra", where), where);
  std::size_t dim = need_size(j, "dim", where);
  auto actions = [&](const char* key) {
    std::vector<Matrix> out;
    const json& arr = need_array(need(j, key, where), a->dim(), where + "." + key);
    for (const auto& m : arr) out.push_back(parse_matrix(m, dim, dim, f));
    return out;
  };
  return std::make_shared<const Bimodule>(a, dim, actions("left"), actions("right"), name);
}

// ---------------------------------------------------------------------------

struct SpecContext {
  std::shared_ptr<const BarLikeModule> m;
  std::size_t top;
  const Field& field() const { return m->field(); }
  std::size_t algebra_dim() const { return m->over()->a()->dim(); }
};

std::string kind_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  return need_string(j, "kind", where);
}

PresimplicialMorphism build_morphism(const json& j, const SpecContext& c,
                                     const std::string& where) {
  std::string kind = kind_of(j, where);
  if (kind == "identity") return PresimplicialMorphism::identity(c.m, c.top + 1);
  if (kind == "zero") return PresimplicialMorphism::zero(c.m, c.m, c.top + 1);
  if (kind == "scalar")
    return PresimplicialMorphism::identity(c.m, c.top + 1)
        .scaled(parse_scalar(need(j, "value", where), c.field()));
  if (kind == "left_central" || kind == "right_central") {
    SparseVector z = parse_vector(need(j, "z", where), c.algebra_dim(), c.field());
    return PresimplicialMorphism::end_multiplication(
        c.m, kind == "left_central" ? Side::kLeft : Side::kRight, z, c.top + 1);
  }
  if (kind == "compose")
    return compose(build_morphism(need(j, "outer", where), c, where + ".outer"),
                   build_morphism(need(j, "inner", where), c, where + ".inner"));
  if (kind == "matrices") {
    const json& degrees = need(j, "degrees", where);
    if (!degrees.is_array() || degrees.empty())
      throw ParseError(where + ".degrees must be a non-empty array");
    std::vector<Matrix> maps;
    for (std::size_t n = 0; n < degrees.size(); ++n) {
      std::size_t d = c.m->level_dim(n);
      maps.push_back(parse_matrix(degrees[n], d, d, c.field()));
    }
    return PresimplicialMorphism(c.m, c.m, std::move(maps), "explicit");
  }
  if (kind == "perturb") {
    auto base = build_morphism(need(j, "base", where), c, where + ".base");
    return base.perturbed(need_size(j, "degree", where), need_size(j, "row", where),
                          need_size(j, "col", where),
                          parse_scalar(need(j, "value", where), c.field()));
  }
  throw ParseError(where + ": unknown morphism kind \"" + kind + "\"");
}

PresimplicialHomotopy build_homotopy(const json& j, const SpecContext& c,
                                     const std::string& where) {
  std::string kind = kind_of(j, where);
  if (kind == "reflexive")
    return reflexive_homotopy(build_morphism(need(j, "of", where), c, where + ".of"));
  if (kind == "symmetric")
    return symmetric_homotopy(build_homotopy(need(j, "of", where), c, where + ".of"));
  if (kind == "transitive")
    return transitive_homotopy(build_homotopy(need(j, "first", where), c, where + ".first"),
                               build_homotopy(need(j, "second", where), c, where + ".second"));
  if (kind == "insert_central")
    return insert_central_homotopy(
        c.m, parse_vector(need(j, "z", where), c.algebra_dim(), c.field()), c.top);
  if (kind == "compose")
    return compose(build_morphism(need(j, "outer", where), c, where + ".outer"),
                   build_homotopy(need(j, "homotopy", where), c, where + ".homotopy"));
  if (kind == "precompose")
    return compose(build_homotopy(need(j, "homotopy", where), c, where + ".homotopy"),
                   build_morphism(need(j, "inner", where), c, where + ".inner"));
  if (kind == "matrices") {
    auto from = build_morphism(need(j, "from", where), c, where + ".from");
    auto to = build_morphism(need(j, "to", where), c, where + ".to");
    const json& degrees = need(j, "degrees", where);
    if (!degrees.is_array() || degrees.empty())
      throw ParseError(where + ".degrees must be a non-empty array");
    std::vector<std::vector<Matrix>> maps;
    for (std::size_t n = 0; n < degrees.size(); ++n) {
      std::string at = where + ".degrees[" + std::to_string(n) + "]";
      const json& level = need_array(degrees[n], n + 1, at);
      std::vector<Matrix> ms;
      for (const auto& m : level)
        ms.push_back(parse_matrix(m, c.m->level_dim(n + 1), c.m->level_dim(n), c.field()));
      maps.push_back(std::move(ms));
    }
    return PresimplicialHomotopy(std::move(from), std::move(to), std::move(maps), "explicit");
  }
  if (kind == "perturb") {
    auto base = build_homotopy(need(j, "base", where), c, where + ".base");
    return base.perturbed(need_size(j, "degree", where), need_size(j, "index", where),
                          need_size(j, "row", where), need_size(j, "col", where),
                          parse_scalar(need(j, "value", where), c.field()));
  }
  throw ParseError(where + ": unknown homotopy kind \"" + kind + "\"");
}

}  // namespace

// ---------------------------------------------------------------------------

Scalar parse_scalar(const json& j, const Field& f) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  throw ParseError("scalars must be integers or exact strings such as \"3/4\", got " + j.dump());
}

SparseVector parse_vector(const json& j, std::size_t dim, const Field& f) {
  const json& arr = need_array(j, dim, "vector");
  SparseVector v;
  for (std::size_t i = 0; i < dim; ++i) {
    Scalar x = parse_scalar(arr[i], f);
    if (!x.is_zero()) v.push_back(i, std::move(x));
  }
  return v;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const Field& f) {
  if (j.is_object()) {
    if (need_size(j, "rows", "matrix") != rows || need_size(j, "cols", "matrix") != cols)
      throw ValidationError("matrix should be " + std::to_string(rows) + "x" +
                            std::to_string(cols));
    std::vector<Matrix::Triplet> t;
    const json& entries = need(j, "entries", "matrix");
    if (!entries.is_array()) throw ParseError("matrix entries must be an array");
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned())
        throw ParseError("matrix entries must be [row, col, value]");
      std::size_t r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
      if (r >= rows || c >= cols) throw ValidationError("matrix entry outside the matrix");
      t.emplace_back(r, c, parse_scalar(e[2], f));
    }
    return Matrix::from_triplets(rows, cols, std::move(t), f);
  }
  const json& arr = need_array(j, rows, "matrix");
  std::vector<std::vector<Scalar>> dense;
  for (const auto& row : arr) {
    const json& r = need_array(row, cols, "matrix row");
    std::vector<Scalar> out;
    for (const auto& x : r) out.push_back(parse_scalar(x, f));
    dense.push_back(std::move(out));
  }
  return Matrix::from_dense(dense, cols, f);
}

const AlgebraPtr& Document::primary_algebra() const {
  return lookup(algebras, primary, "document");
}

BimodulePtr Document::coefficient_bimodule(const std::string& name, const AlgebraPtr& over) const {
  if (name == "regular") return std::make_shared<const Bimodule>(Bimodule::regular(over));
  auto it = bimodules.find(name);
  if (it == bimodules.end()) throw ValidationError("unknown coefficient bimodule " + name);
  if (it->second->over() != over)
    throw ValidationError("bimodule " + name + " is not over algebra " + over->name());
  return it->second;
}

Document parse_document(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  try {
    Document d;
    d.name = j.contains("name") ? need_string(j, "name", "document") : name;
    d.field = j.contains("field") ? parse_field(j["field"]) : Field::rationals();
    const json& algs = need(j, "algebras", "document");
    if (!algs.is_object() || algs.empty())
      throw ParseError("document.algebras must be a non-empty object");
    for (const auto& [key, value] : algs.items())
      d.algebras[key] = parse_algebra(key, value, d.field);
    if (j.contains("primary")) d.primary = need_string(j, "primary", "document");
    lookup(d.algebras, d.primary, "document.primary");

    if (j.contains("triple")) {
      const json& t = j["triple"];
      Triple tr;
      tr.a = lookup(d.algebras, need_string(t, "A", "triple"), "triple.A");
      tr.b = lookup(d.algebras, need_string(t, "B", "triple"), "triple.B");
      Matrix eps = parse_matrix(need(t, "epsilon", "triple"), tr.a->dim(), tr.b->dim(), d.field);
      tr.eps = std::make_shared<const AlgebraMorphism>(tr.b, tr.a, std::move(eps));
      d.triple = std::move(tr);
    }
    if (j.contains("bimodules")) {
      const json& bms = j["bimodules"];
      if (!bms.is_object()) throw ParseError("document.bimodules must be an object");
      for (const auto& [key, value] : bms.items()) {
        if (key == "regular") throw ParseError("the bimodule name \"regular\" is reserved");
        d.bimodules[key] = parse_bimodule(key, value, d.algebras, d.field);
      }
    }
    if (j.contains("coefficients")) d.coefficients = need_string(j, "coefficients", "document");
    if (j.contains("max_degree")) d.max_degree = need_size(j, "max_degree", "document");
    if (j.contains("homotopy")) {
      if (!j["homotopy"].is_object()) throw ParseError("document.homotopy must be an object");
      d.homotopy = j["homotopy"];
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
  return parse_document(ss.str(), stem);
}

HomotopyEquivalence build_equivalence(const json& block, std::shared_ptr<const BarLikeModule> m,
                                      std::size_t top) {
  try {
    SpecContext c{std::move(m), top};
    const json& e = block.contains("equivalence") ? block["equivalence"] : block;
    if (e.contains("kind") && kind_of(e, "equivalence") == "central_twist") {
      return central_twist_equivalence(
          c.m, parse_vector(need(e, "z", "equivalence"), c.algebra_dim(), c.field()),
          parse_vector(need(e, "z_inverse", "equivalence"), c.algebra_dim(), c.field()), top);
    }
    return HomotopyEquivalence{build_morphism(need(e, "f", "equivalence"), c, "f"),
                               build_morphism(need(e, "g", "equivalence"), c, "g"),
                               build_homotopy(need(e, "h", "equivalence"), c, "h").renamed("h"),
                               build_homotopy(need(e, "t", "equivalence"), c, "t").renamed("t")};
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed homotopy instance: ") + ex.what());
  }
}

}  // namespace simpres
