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

// simpres command-line tool. Talks to the library only through simpres.h.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "simpres/simpres.h"

namespace {

struct Flags {
  std::string path;
  std::string theory;
  std::string coefficients;
  long long max_degree = -1;
  bool oracle = false;
  bool json = false;
  std::size_t dim_cap = 0;
};

void add_common(CLI::App* sub, Flags& f, bool computes) {
  sub->add_option("file", f.path, "JSON input document")->required();
  sub->add_option("--max-degree", f.max_degree, "Highest degree to compute or check")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--coefficients", f.coefficients,
                  "Coefficient bimodule name, or \"regular\" for A itself");
  sub->add_option("--theory", f.theory, "hochschild or secondary")
      ->check(CLI::IsMember({"hochschild", "secondary"}));
  sub->add_option("--dim-cap", f.dim_cap,
                  "Largest ambient level dimension to attempt (default $SIMPRES_DIM_CAP or 2^20)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--json", f.json, "Print JSON instead of TSV");
  if (computes) sub->add_flag("--oracle", f.oracle, "Also run the classical oracle and compare");
}

int usage_error(const std::string& message) {
  std::cerr << "simpres: " << message << "\n";
  return SIMPRES_EXIT_USAGE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simplicial Hochschild and secondary Hochschild (co)homology"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(simpres_version()));
  Flags f;
  CLI::App* check = app.add_subcommand("check", "Validate inputs and run every identity check");
  CLI::App* homology = app.add_subcommand("homology", "Betti numbers of the homology complex");
  CLI::App* cohomology =
      app.add_subcommand("cohomology", "Betti numbers of the cohomology complex");
  CLI::App* verify = app.add_subcommand(
      "homotopy-verify", "Verify a presimplicial homotopy equivalence and compare homology");
  add_common(check, f, false);
  add_common(homology, f, true);
  add_common(cohomology, f, true);
  add_common(verify, f, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return SIMPRES_EXIT_USAGE;
  }

  std::string command = app.get_subcommands().front()->get_name();
  simpres_options* raw = nullptr;
  if (simpres_options_new(&raw) != SIMPRES_OK) return usage_error(simpres_last_error());
  std::unique_ptr<simpres_options, void (*)(simpres_options*)> opts(raw, simpres_options_free);
  if (!f.theory.empty())
    simpres_options_set_theory(opts.get(), f.theory == "secondary" ? SIMPRES_THEORY_SECONDARY
                                                                   : SIMPRES_THEORY_HOCHSCHILD);
  if (!f.coefficients.empty()) simpres_options_set_coefficients(opts.get(), f.coefficients.c_str());
  if (f.max_degree >= 0)
    simpres_options_set_max_degree(opts.get(), static_cast<std::size_t>(f.max_degree));
  simpres_options_set_oracle(opts.get(), f.oracle ? 1 : 0);
  simpres_options_set_dim_cap(opts.get(), f.dim_cap);

  simpres_result* res = nullptr;
  if (simpres_run_file(command.c_str(), f.path.c_str(), opts.get(), &res) != SIMPRES_OK)
    return usage_error(simpres_last_error());
  std::unique_ptr<simpres_result, void (*)(simpres_result*)> result(res, simpres_result_free);

  std::fputs(f.json ? simpres_result_json(res) : simpres_result_tsv(res), stdout);
  int code = simpres_result_exit_code(res);
  for (std::size_t k = 0; k < simpres_result_message_count(res); ++k)
    if (code != SIMPRES_EXIT_OK) std::cerr << "simpres: " << simpres_result_message(res, k) << "\n";
  return code;
}
