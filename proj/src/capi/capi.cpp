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

#include "simpres/simpres.h"

#include <cstring>
#include <new>
#include <string>

#include "simpres/commands.hpp"
#include "simpres/errors.hpp"

struct simpres_options {
  simpres::RunOptions o;
};

struct simpres_document {
  simpres::Document d;
};

struct simpres_result {
  simpres::CommandResult r;
  std::string tsv;
  std::string json;
};

namespace {

thread_local std::string last_error;

simpres_status fail(simpres_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
simpres_status guarded(F&& body) {
  try {
    body();
    return SIMPRES_OK;
  } catch (const simpres::ParseError& e) {
    return fail(SIMPRES_ERR_PARSE, e.what());
  } catch (const simpres::ValidationError& e) {
    return fail(SIMPRES_ERR_VALIDATION, e.what());
  } catch (const simpres::DomainError& e) {
    return fail(SIMPRES_ERR_DOMAIN, e.what());
  } catch (const simpres::InfeasibleError& e) {
    return fail(SIMPRES_ERR_INFEASIBLE, e.what());
  } catch (const simpres::ConstructionError& e) {
    return fail(SIMPRES_ERR_CONSTRUCTION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SIMPRES_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SIMPRES_ERR_INTERNAL, e.what());
  }
}

simpres_status wrap(simpres::CommandResult r, simpres_result** out) {
  auto* res = new simpres_result{std::move(r), {}, {}};
  res->tsv = simpres::to_tsv(res->r);
  res->json = simpres::to_json(res->r);
  *out = res;
  return SIMPRES_OK;
}

simpres::RunOptions options_or_default(const simpres_options* o) {
  return o ? o->o : simpres::RunOptions{};
}

}  // namespace

extern "C" {

const char* simpres_version(void) { return "1.0.0"; }

const char* simpres_last_error(void) { return last_error.c_str(); }

const char* simpres_status_name(simpres_status s) {
  switch (s) {
    case SIMPRES_OK: return "ok";
    case SIMPRES_ERR_PARSE: return "parse error";
    case SIMPRES_ERR_VALIDATION: return "validation error";
    case SIMPRES_ERR_DOMAIN: return "domain error";
    case SIMPRES_ERR_INFEASIBLE: return "infeasible";
    case SIMPRES_ERR_CONSTRUCTION: return "construction error";
    case SIMPRES_ERR_ARGUMENT: return "bad argument";
    case SIMPRES_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int simpres_chain_homotopy_sign(void) { return simpres::kChainHomotopySign; }

simpres_status simpres_calibrate_chain_homotopy_sign(int* sign) {
  if (!sign) return fail(SIMPRES_ERR_ARGUMENT, "sign is NULL");
  return guarded([&] { *sign = simpres::calibrate_chain_homotopy_sign(); });
}

simpres_status simpres_options_new(simpres_options** out) {
  if (!out) return fail(SIMPRES_ERR_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new simpres_options{}; });
}

void simpres_options_free(simpres_options* o) { delete o; }

simpres_status simpres_options_set_theory(simpres_options* o, simpres_theory t) {
  if (!o) return fail(SIMPRES_ERR_ARGUMENT, "options is NULL");
  switch (t) {
    case SIMPRES_THEORY_DEFAULT: o->o.theory.reset(); break;
    case SIMPRES_THEORY_HOCHSCHILD: o->o.theory = simpres::Theory::kHochschild; break;
    case SIMPRES_THEORY_SECONDARY: o->o.theory = simpres::Theory::kSecondary; break;
    default: return fail(SIMPRES_ERR_ARGUMENT, "unknown theory");
  }
  return SIMPRES_OK;
}

simpres_status simpres_options_set_coefficients(simpres_options* o, const char* name) {
  if (!o) return fail(SIMPRES_ERR_ARGUMENT, "options is NULL");
  if (name) o->o.coefficients = name;
  else o->o.coefficients.reset();
  return SIMPRES_OK;
}

simpres_status simpres_options_set_max_degree(simpres_options* o, size_t n) {
  if (!o) return fail(SIMPRES_ERR_ARGUMENT, "options is NULL");
  o->o.max_degree = n;
  return SIMPRES_OK;
}

simpres_status simpres_options_set_oracle(simpres_options* o, int enabled) {
  if (!o) return fail(SIMPRES_ERR_ARGUMENT, "options is NULL");
  o->o.oracle = enabled != 0;
  return SIMPRES_OK;
}

simpres_status simpres_options_set_dim_cap(simpres_options* o, size_t cap) {
  if (!o) return fail(SIMPRES_ERR_ARGUMENT, "options is NULL");
  if (cap == 0) o->o.dim_cap.reset();
  else o->o.dim_cap = cap;
  return SIMPRES_OK;
}

simpres_status simpres_document_load(const char* path, simpres_document** out) {
  if (!path || !out) return fail(SIMPRES_ERR_ARGUMENT, "path or out is NULL");
  return guarded([&] { *out = new simpres_document{simpres::load_document(path)}; });
}

simpres_status simpres_document_parse(const char* json_text, const char* name,
                                      simpres_document** out) {
  if (!json_text || !out) return fail(SIMPRES_ERR_ARGUMENT, "json_text or out is NULL");
  return guarded([&] {
    *out = new simpres_document{simpres::parse_document(json_text, name ? name : "document")};
  });
}

void simpres_document_free(simpres_document* d) { delete d; }

const char* simpres_document_name(const simpres_document* d) {
  return d ? d->d.name.c_str() : "";
}

simpres_status simpres_run_file(const char* command, const char* path, const simpres_options* o,
                                simpres_result** out) {
  if (!command || !path || !out) return fail(SIMPRES_ERR_ARGUMENT, "NULL argument");
  return guarded([&] { wrap(simpres::run_command(command, path, options_or_default(o)), out); });
}

simpres_status simpres_run_document(const char* command, const simpres_document* d,
                                    const simpres_options* o, simpres_result** out) {
  if (!command || !d || !out) return fail(SIMPRES_ERR_ARGUMENT, "NULL argument");
  return guarded([&] {
    wrap(simpres::run_command_on_document(command, d->d, options_or_default(o)), out);
  });
}

void simpres_result_free(simpres_result* r) { delete r; }

int simpres_result_exit_code(const simpres_result* r) {
  return r ? r->r.exit_code : SIMPRES_EXIT_USAGE;
}

const char* simpres_result_status(const simpres_result* r) {
  return r ? r->r.status.c_str() : "";
}

const char* simpres_result_tsv(const simpres_result* r) { return r ? r->tsv.c_str() : ""; }

const char* simpres_result_json(const simpres_result* r) { return r ? r->json.c_str() : ""; }

size_t simpres_result_message_count(const simpres_result* r) {
  return r ? r->r.messages.size() : 0;
}

const char* simpres_result_message(const simpres_result* r, size_t k) {
  if (!r || k >= r->r.messages.size()) return "";
  return r->r.messages[k].c_str();
}

size_t simpres_result_degree_count(const simpres_result* r) {
  if (!r) return 0;
  const simpres::Section* s = r->r.section("betti");
  return s ? s->rows.size() : 0;
}

simpres_status simpres_result_value(const simpres_result* r, const char* column, size_t degree,
                                    size_t* value) {
  if (!r || !column || !value) return fail(SIMPRES_ERR_ARGUMENT, "NULL argument");
  const simpres::Section* s = r->r.section("betti");
  if (!s) return fail(SIMPRES_ERR_ARGUMENT, "the result has no betti section");
  if (degree >= s->rows.size()) return fail(SIMPRES_ERR_ARGUMENT, "degree out of range");
  for (std::size_t c = 0; c < s->columns.size(); ++c)
    if (s->columns[c] == column) {
      *value = s->rows[degree][c].get<std::size_t>();
      return SIMPRES_OK;
    }
  return fail(SIMPRES_ERR_ARGUMENT, std::string("no column ") + column);
}

size_t simpres_result_failure_count(const simpres_result* r) {
  if (!r) return 0;
  const simpres::Section* s = r->r.section("checks");
  if (!s) return 0;
  std::size_t total = 0;
  for (const auto& row : s->rows) total += row[2].get<std::size_t>();
  return total;
}

}  // extern "C"
