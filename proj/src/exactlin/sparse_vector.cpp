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

#include "simpres/sparse_vector.hpp"

#include <algorithm>
#include <sstream>

namespace simpres {

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
      if (out.entries_.back().second.is_zero()) out.entries_.pop_back();
      continue;
    }
    if (!e.second.is_zero()) out.entries_.push_back(std::move(e));
  }
  return out;
}

const Scalar* SparseVector::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

void SparseVector::push_back(std::size_t index, Scalar value) {
  if (value.is_zero()) return;
  if (!entries_.empty() && entries_.back().first >= index)
    throw DomainError("SparseVector::push_back: indices must increase");
  entries_.emplace_back(index, std::move(value));
}

void SparseVector::axpy(const Scalar& c, const SparseVector& w) {
  if (c.is_zero() || w.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + w.entries_.size());
  auto a = entries_.begin();
  auto b = w.entries_.begin();
  while (a != entries_.end() || b != w.entries_.end()) {
    if (b == w.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector out;
  if (c.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) out.entries_.emplace_back(i, x * c);
  return out;
}

SparseVector SparseVector::operator-() const {
  SparseVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) out.entries_.emplace_back(i, -x);
  return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  if (b.empty()) return a;
  SparseVector r = a;
  r.axpy(b.entries_.front().second.field().one(), b);
  return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  if (b.empty()) return a;
  SparseVector r = a;
  r.axpy(-b.entries_.front().second.field().one(), b);
  return r;
}

std::string SparseVector::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, x] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << i << ": " << x;
  }
  os << "}";
  return os.str();
}

SparseVector kron(const SparseVector& a, const SparseVector& b, std::size_t dim_b) {
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.push_back(i * dim_b + j, x * y);
  return out;
}

}  // namespace simpres
