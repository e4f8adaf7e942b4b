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

#ifndef SIMPRES_REPORT_HPP
#define SIMPRES_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <deque>
#include <vector>

namespace simpres {

/// Outcome of one family of exhaustive checks (e.g. "associativity").
struct CheckOutcome {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// First few failing locations, human readable.
  std::vector<std::string> examples;

  bool ok() const { return failures == 0; }
  template <class Where>
  void expect(bool holds, Where&& where) {
    ++instances;
    if (holds) return;
    ++failures;
    if (examples.size() < kMaxExamples) examples.push_back(where());
  }

  static constexpr std::size_t kMaxExamples = 8;
};

/// Ordered list of check families. An empty failure list means valid.
class Report {
 public:
  CheckOutcome& family(std::string_view name);

  template <class Where>
  void expect(std::string_view name, bool holds, Where&& where) {
    family(name).expect(holds, std::forward<Where>(where));
  }
  void fail(std::string_view name, std::string where);

  bool ok() const;
  std::size_t failure_count() const;
  const std::deque<CheckOutcome>& families() const { return families_; }
  /// Appends other's families, prefixing their names.
  void merge(const Report& other, std::string_view prefix = {});

  /// Failing locations, one per line, "family: location".
  std::vector<std::string> failure_lines() const;

 private:
  std::deque<CheckOutcome> families_;
};

}  // namespace simpres

#endif  // SIMPRES_REPORT_HPP
