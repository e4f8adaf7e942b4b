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

#include "simpres/report.hpp"

#include <algorithm>

namespace simpres {

CheckOutcome& Report::family(std::string_view name) {
  for (auto& f : families_)
    if (f.name == name) return f;
  families_.push_back(CheckOutcome{std::string(name)});
  return families_.back();
}

void Report::fail(std::string_view name, std::string where) {
  family(name).expect(false, [&] { return std::move(where); });
}

bool Report::ok() const {
  return std::all_of(families_.begin(), families_.end(),
                     [](const CheckOutcome& f) { return f.ok(); });
}

std::size_t Report::failure_count() const {
  std::size_t n = 0;
  for (const auto& f : families_) n += f.failures;
  return n;
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (const auto& f : other.families_) {
    CheckOutcome& mine = family(std::string(prefix) + f.name);
    mine.instances += f.instances;
    mine.failures += f.failures;
    for (const auto& e : f.examples)
      if (mine.examples.size() < CheckOutcome::kMaxExamples) mine.examples.push_back(e);
  }
}

std::vector<std::string> Report::failure_lines() const {
  std::vector<std::string> out;
  for (const auto& f : families_)
    for (const auto& e : f.examples) out.push_back(f.name + ": " + e);
  return out;
}

}  // namespace simpres
