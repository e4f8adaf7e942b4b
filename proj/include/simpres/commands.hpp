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

#ifndef SIMPRES_COMMANDS_HPP
#define SIMPRES_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "simpres/document.hpp"

namespace simpres {

inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultCheckDegree = 2;
inline constexpr std::size_t kDefaultHomologyDegree = 3;

inline constexpr int kExitOk = 0;
/// Failed checks, oracle mismatch, refusal by the feasibility guard.
inline constexpr int kExitFailure = 1;
/// Unreadable or malformed input, bad flags.
inline constexpr int kExitUsage = 2;

enum class Theory { kHochschild, kSecondary };
Theory parse_theory(const std::string& name);
std::string theory_name(Theory t);

struct RunOptions {
  std::optional<Theory> theory;
  std::optional<std::string> coefficients;
  std::optional<std::size_t> max_degree;
  bool oracle = false;
  /// Unset: SIMPRES_DIM_CAP, else kDefaultDimCap.
  std::optional<std::size_t> dim_cap;
};

std::size_t resolve_dim_cap(const RunOptions& o);

struct Section {
  std::string name;
  std::vector<std::string> columns;
  /// Cells are JSON scalars so both renderings print the same numbers.
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

struct CommandResult {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::int64_t wall_time_ms = 0;
  std::string status = "ok";
  int exit_code = kExitOk;
  std::vector<std::string> messages;
  std::vector<Section> sections;

  const Section* section(const std::string& name) const;
};

/// Metadata, then one block per section. The wall_time_ms line is the only
/// part that changes between identical runs.
std::string to_tsv(const CommandResult& r);
std::string to_json(const CommandResult& r);

CommandResult run_check(const Document& d, const RunOptions& o);
CommandResult run_homology(const Document& d, const RunOptions& o);
CommandResult run_cohomology(const Document& d, const RunOptions& o);
CommandResult run_homotopy_verify(const Document& d, const RunOptions& o);

/// Loads `path` and runs `command` ("check", "homology", "cohomology",
/// "homotopy-verify"), mapping exceptions to exit codes: ParseError -> 2,
/// other library errors -> 1.
CommandResult run_command(const std::string& command, const std::string& path,
                          const RunOptions& o);
CommandResult run_command_on_document(const std::string& command, const Document& d,
                                      const RunOptions& o);
CommandResult run_command_on_text(const std::string& command, const std::string& text,
                                  const std::string& name, const RunOptions& o);

}  // namespace simpres

#endif  // SIMPRES_COMMANDS_HPP
