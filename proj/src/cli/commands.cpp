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

#include "simpres/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "simpres/errors.hpp"
#include "simpres/oracles.hpp"

namespace simpres {

using nlohmann::ordered_json;

Theory parse_theory(const std::string& name) {
  if (name == "hochschild") return Theory::kHochschild;
  if (name == "secondary") return Theory::kSecondary;
  throw ParseError("unknown theory \"" + name + "\" (expected hochschild or secondary)");
}

std::string theory_name(Theory t) {
  return t == Theory::kHochschild ? "hochschild" : "secondary";
}

std::size_t resolve_dim_cap(const RunOptions& o) {
  if (o.dim_cap) return *o.dim_cap;
  if (const char* env = std::getenv("SIMPRES_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw ParseError(std::string("SIMPRES_DIM_CAP must be a positive integer, got ") + env);
    return static_cast<std::size_t>(v);
  }
  return kDefaultDimCap;
}

const Section* CommandResult::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

std::string cell_text(const ordered_json& c) {
  if (c.is_string()) return c.get<std::string>();
  return c.dump();
}

}  // namespace

std::string to_tsv(const CommandResult& r) {
  std::ostringstream out;
  for (const auto& [k, v] : r.metadata) out << "# " << k << '\t' << v << '\n';
  out << "# wall_time_ms\t" << r.wall_time_ms << '\n';
  out << "# status\t" << r.status << '\n';
  out << "# exit_code\t" << r.exit_code << '\n';
  for (const auto& m : r.messages) out << "# message\t" << m << '\n';
  for (const auto& s : r.sections) {
    out << "\n## " << s.name << '\n';
    for (std::size_t c = 0; c < s.columns.size(); ++c) out << (c ? "\t" : "") << s.columns[c];
    out << '\n';
    for (const auto& row : s.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << cell_text(row[c]);
      out << '\n';
    }
  }
  return out.str();
}

std::string to_json(const CommandResult& r) {
  ordered_json j;
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  meta["wall_time_ms"] = r.wall_time_ms;
  j["metadata"] = meta;
  j["status"] = r.status;
  j["exit_code"] = r.exit_code;
  j["messages"] = r.messages;
  ordered_json sections = ordered_json::object();
  for (const auto& s : r.sections) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : s.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[s.columns[c]] = row[c];
      rows.push_back(obj);
    }
    sections[s.name] = rows;
  }
  j["sections"] = sections;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

struct Setup {
  Theory theory;
  SimplicialAlgebraPtr over;
  std::shared_ptr<const BarLikeModule> bar;
  AlgebraPtr a;
  std::size_t dim_b = 1;
};

Setup make_setup(const Document& d, Theory theory) {
  Setup s{theory, nullptr, nullptr, nullptr};
  if (theory == Theory::kHochschild) {
    s.a = d.primary_algebra();
    s.over = env_algebra(s.a);
    s.bar = std::make_shared<const BarModule>(s.over);
  } else {
    if (!d.triple) throw ValidationError("the secondary theory needs a triple in the document");
    s.a = d.triple->a;
    s.dim_b = d.triple->b->dim();
    s.over = secondary_algebra(d.triple->eps);
    s.bar = std::make_shared<const SecondaryBarModule>(s.over);
  }
  return s;
}

/// dim M (dim A)^{n+2} (dim B)^{(n+1)(n+2)/2}: the ambient dimension of
/// M ⊗ (bar level n) before any quotient.
long double predicted_ambient(const Setup& s, std::size_t dim_m, std::size_t n) {
  long double v = static_cast<long double>(dim_m) *
                  std::pow(static_cast<long double>(s.a->dim()), static_cast<long double>(n + 2));
  if (s.theory == Theory::kSecondary)
    v *= std::pow(static_cast<long double>(s.dim_b),
                  static_cast<long double>((n + 1) * (n + 2) / 2));
  return v;
}

std::string format_estimate(long double v) {
  if (v < 1e18L) return std::to_string(static_cast<unsigned long long>(v));
  std::ostringstream o;
  o.precision(3);
  o << static_cast<double>(v);
  return o.str();
}

/// Returns a refusal message if some level through `top` is above the cap.
std::optional<std::string> guard(const Setup& s, std::size_t dim_m, std::size_t top,
                                 std::size_t cap) {
  for (std::size_t n = 0; n <= top; ++n) {
    long double v = predicted_ambient(s, dim_m, n);
    if (v > static_cast<long double>(cap))
      return "refused: degree " + std::to_string(n) + " needs ambient dimension " +
             format_estimate(v) + ", above the cap " + std::to_string(cap) +
             " (raise it with --dim-cap or SIMPRES_DIM_CAP)";
  }
  return std::nullopt;
}

void base_metadata(CommandResult& r, const Document& d, const std::string& command) {
  r.metadata = {{"fixture", d.name}, {"command", command}, {"field", d.field.name()}};
}

void refuse(CommandResult& r, std::string message) {
  r.status = "refused";
  r.exit_code = kExitFailure;
  r.messages.push_back(std::move(message));
}

void add_report(CommandResult& r, const Report& rep) {
  Section checks{"checks", {"family", "instances", "failures"}, {}};
  for (const auto& f : rep.families())
    checks.rows.push_back({f.name, f.instances, f.failures});
  Section fails{"failures", {"family", "location"}, {}};
  for (const auto& f : rep.families())
    for (const auto& e : f.examples) fails.rows.push_back({f.name, e});
  r.sections.push_back(std::move(checks));
  r.sections.push_back(std::move(fails));
  if (!rep.ok()) {
    r.status = "fail";
    r.exit_code = kExitFailure;
  }
}

std::size_t degree_or(const RunOptions& o, const Document& d, std::size_t fallback) {
  if (o.max_degree) return *o.max_degree;
  if (d.max_degree) return *d.max_degree;
  return fallback;
}

/// Runs `body`, turning a thrown validation problem into a failing family.
template <class F>
void guarded(Report& r, const std::string& what, F&& body) {
  try {
    body();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail(what, e.what());
  }
}

void check_theory(Report& total, const Document& d, Theory theory, std::size_t up_to) {
  Setup s = make_setup(d, theory);
  std::string p = theory_name(theory) + " ";
  total.merge(check_simplicial_identities(*s.over, up_to), p + "algebra: ");
  total.merge(check_algebra_morphisms(*s.over, up_to), p + "algebra: ");
  total.merge(check_simplicial_identities(*s.bar, up_to), p + "bar: ");
  total.merge(check_module_action(*s.bar, up_to), p + "bar: ");
  total.merge(check_module_compatibility(*s.bar, up_to), p + "bar: ");
  std::vector<std::string> names{"regular"};
  for (const auto& [name, m] : d.bimodules)
    if (m->over() == s.a) names.push_back(name);
  for (const auto& name : names) {
    BimodulePtr m = d.coefficient_bimodule(name, s.a);
    guarded(total, p + name + ": construction", [&] {
      ModulePtr x = coefficient_right_module(m, s.over);
      total.merge(check_simplicial_identities(*x, up_to), p + name + " right: ");
      total.merge(check_module_compatibility(*x, up_to), p + name + " right: ");
      CosimplicialPtr c = constant_cosimplicial_module(m, s.over);
      total.merge(check_cosimplicial_identities(view_of(*c), up_to), p + name + " cosimplicial: ");
      total.merge(check_cosimplicial_compatibility(*c, up_to), p + name + " cosimplicial: ");
    });
  }
}

}  // namespace

CommandResult run_check(const Document& d, const RunOptions& o) {
  CommandResult r;
  base_metadata(r, d, "check");
  // The document's max_degree is meant for computations; checks use their own
  // default unless the flag is given.
  std::size_t up_to = o.max_degree.value_or(kDefaultCheckDegree);
  r.metadata.emplace_back("max_degree", std::to_string(up_to));
  std::size_t cap = resolve_dim_cap(o);

  Report total;
  bool algebras_ok = true;
  for (const auto& [name, a] : d.algebras) {
    Report v = a->validate();
    algebras_ok = algebras_ok && v.ok();
    total.merge(v);
  }
  bool bimodules_ok = algebras_ok;
  for (const auto& [name, m] : d.bimodules) {
    Report v = m->validate();
    bimodules_ok = bimodules_ok && v.ok();
    total.merge(v, "bimodule " + name + ": ");
  }
  bool triple_ok = false;
  if (d.triple && algebras_ok) {
    Report v = check_epsilon(*d.triple->eps);
    triple_ok = v.ok();
    total.merge(v, "epsilon: ");
    for (const auto& [name, m] : d.bimodules)
      if (m->over() == d.triple->a) total.merge(check_b_symmetric(*m, *d.triple->eps), name + ": ");
  }

  std::vector<Theory> theories;
  if (algebras_ok && bimodules_ok) {
    theories.push_back(Theory::kHochschild);
    if (triple_ok) theories.push_back(Theory::kSecondary);
  } else {
    r.messages.push_back("skipped the simplicial checks: the input structures are invalid");
  }
  for (Theory t : theories) {
    Setup s = make_setup(d, t);
    if (auto refusal = guard(s, 1, up_to + 1, cap)) {
      refuse(r, *refusal);
      return r;
    }
    check_theory(total, d, t, up_to);
  }
  add_report(r, total);
  return r;
}

namespace {

struct Prepared {
  Setup setup;
  std::string coefficients;
  BimodulePtr m;
  std::size_t up_to;
};

std::optional<Prepared> prepare(CommandResult& r, const Document& d, const RunOptions& o,
                                const std::string& command, Theory theory,
                                std::size_t fallback_degree, const std::string& coefficients) {
  base_metadata(r, d, command);
  Prepared p{make_setup(d, theory), coefficients, nullptr, degree_or(o, d, fallback_degree)};
  r.metadata.emplace_back("theory", theory_name(theory));
  r.metadata.emplace_back("coefficients", p.coefficients);
  r.metadata.emplace_back("max_degree", std::to_string(p.up_to));
  p.m = d.coefficient_bimodule(p.coefficients, p.setup.a);
  if (auto refusal = guard(p.setup, p.m->dim(), p.up_to + 1, resolve_dim_cap(o))) {
    refuse(r, *refusal);
    return std::nullopt;
  }
  return p;
}

std::vector<std::size_t> oracle_table(const Prepared& p, bool cohomology) {
  if (p.setup.theory == Theory::kSecondary && p.setup.dim_b != 1)
    throw ParseError("--oracle needs the hochschild theory or a triple with B = k");
  return cohomology ? classical_hochschild_cobetti(*p.setup.a, *p.m, p.up_to)
                    : classical_hochschild_betti(*p.setup.a, *p.m, p.up_to);
}

void betti_section(CommandResult& r, const ChainComplex& cx, std::size_t up_to,
                   const std::optional<std::vector<std::size_t>>& oracle) {
  Section s{"betti", {"degree", "dim", "betti"}, {}};
  if (oracle) s.columns.push_back("oracle");
  bool mismatch = false;
  for (std::size_t n = 0; n <= up_to; ++n) {
    std::size_t b = cx.betti(n);
    std::vector<ordered_json> row{n, cx.dim(n), b};
    if (oracle) {
      row.push_back((*oracle)[n]);
      mismatch = mismatch || (*oracle)[n] != b;
    }
    s.rows.push_back(std::move(row));
  }
  r.sections.push_back(std::move(s));
  if (mismatch) {
    r.status = "mismatch";
    r.exit_code = kExitFailure;
    r.messages.push_back("the pipeline disagrees with the oracle");
  }
}

}  // namespace

CommandResult run_homology(const Document& d, const RunOptions& o) {
  CommandResult r;
  auto p = prepare(r, d, o, "homology", o.theory.value_or(Theory::kHochschild), kDefaultHomologyDegree,
                   o.coefficients.value_or(d.coefficients));
  if (!p) return r;
  std::optional<std::vector<std::size_t>> oracle;
  if (o.oracle) oracle = oracle_table(*p, false);
  ModulePtr x = coefficient_right_module(p->m, p->setup.over);
  TensorLevels t(x, p->setup.bar, TensorLevels::Relations::kGenerators, resolve_dim_cap(o));
  ChainComplex cx = to_chain_complex(t, p->up_to + 1);
  betti_section(r, cx, p->up_to, oracle);
  return r;
}

CommandResult run_cohomology(const Document& d, const RunOptions& o) {
  CommandResult r;
  auto p = prepare(r, d, o, "cohomology", o.theory.value_or(Theory::kHochschild),
                   kDefaultHomologyDegree, o.coefficients.value_or(d.coefficients));
  if (!p) return r;
  std::optional<std::vector<std::size_t>> oracle;
  if (o.oracle) oracle = oracle_table(*p, true);
  CosimplicialPtr c = constant_cosimplicial_module(p->m, p->setup.over);
  HomLevels h(p->setup.bar, c, resolve_dim_cap(o));
  ChainComplex cx = to_cochain_complex(h, p->up_to + 1);
  betti_section(r, cx, p->up_to, oracle);
  return r;
}

CommandResult run_homotopy_verify(const Document& d, const RunOptions& o) {
  CommandResult r;
  if (!d.homotopy) throw ParseError("the document has no homotopy instance");
  const nlohmann::json& block = *d.homotopy;
  Theory theory = o.theory ? *o.theory
                  : block.contains("theory") && block["theory"].is_string()
                      ? parse_theory(block["theory"].get<std::string>())
                      : Theory::kHochschild;
  std::size_t fallback = kDefaultCheckDegree;
  if (block.contains("max_degree") && block["max_degree"].is_number_unsigned())
    fallback = block["max_degree"].get<std::size_t>();
  std::string coefficients = o.coefficients.value_or(
      block.contains("coefficients") && block["coefficients"].is_string()
          ? block["coefficients"].get<std::string>()
          : d.coefficients);
  RunOptions local = o;
  if (!o.max_degree && block.contains("max_degree")) local.max_degree = fallback;
  auto p = prepare(r, d, local, "homotopy-verify", theory, fallback, coefficients);
  if (!p) return r;

  HomotopyEquivalence e = build_equivalence(block, p->setup.bar, p->up_to);
  ModulePtr x = coefficient_right_module(p->m, p->setup.over);
  ReplacementReport rep = verify_replacement(x, e, p->up_to, resolve_dim_cap(o));

  Section betti{"betti", {"degree", "source", "target"}, {}};
  for (std::size_t n = 0; n < rep.betti_source.size(); ++n)
    betti.rows.push_back({n, rep.betti_source[n], rep.betti_target[n]});
  r.sections.push_back(std::move(betti));
  add_report(r, rep.checks);
  r.metadata.emplace_back("chain_homotopy_sign", std::to_string(kChainHomotopySign));
  if (rep.betti_source.empty()) {
    r.messages.push_back("skipped the homology comparison: the equivalence failed its checks");
  } else if (!rep.betti_equal()) {
    r.status = "fail";
    r.exit_code = kExitFailure;
    r.messages.push_back("the Betti tables differ");
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

CommandResult error_result(const std::string& command, const std::string& name, int code,
                           const std::string& status, const std::string& message) {
  CommandResult r;
  r.metadata = {{"fixture", name}, {"command", command}};
  r.status = status;
  r.exit_code = code;
  r.messages.push_back(message);
  return r;
}

template <class Load>
CommandResult dispatch(const std::string& command, const std::string& name, const RunOptions& o,
                       Load&& load) {
  auto start = std::chrono::steady_clock::now();
  CommandResult r;
  try {
    Document d = load();
    if (command == "check") r = run_check(d, o);
    else if (command == "homology") r = run_homology(d, o);
    else if (command == "cohomology") r = run_cohomology(d, o);
    else if (command == "homotopy-verify") r = run_homotopy_verify(d, o);
    else throw ParseError("unknown command " + command);
  } catch (const ParseError& e) {
    r = error_result(command, name, kExitUsage, "error", e.what());
  } catch (const InfeasibleError& e) {
    r = error_result(command, name, kExitFailure, "refused", e.what());
  } catch (const Error& e) {
    r = error_result(command, name, kExitFailure, "fail", e.what());
  }
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

std::string stem_of(const std::string& path) {
  std::string stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
  return stem;
}

}  // namespace

CommandResult run_command(const std::string& command, const std::string& path,
                          const RunOptions& o) {
  return dispatch(command, stem_of(path), o, [&] { return load_document(path); });
}

CommandResult run_command_on_document(const std::string& command, const Document& d,
                                      const RunOptions& o) {
  return dispatch(command, d.name, o, [&] { return d; });
}

CommandResult run_command_on_text(const std::string& command, const std::string& text,
                                  const std::string& name, const RunOptions& o) {
  return dispatch(command, name, o, [&] { return parse_document(text, name); });
}

}  // namespace simpres
