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

#ifndef SIMPRES_ONCE_CACHE_HPP
#define SIMPRES_ONCE_CACHE_HPP

#include <map>
#include <memory>
#include <mutex>

namespace simpres {

/// Write-once map from keys to lazily built values. References returned by
/// get() stay valid for the cache's lifetime. Two threads may race to build
/// the same entry; the first insertion wins and both results are identical.
template <class Key, class T>
class OnceCache {
 public:
  template <class Make>
  const T& get(const Key& key, Make&& make) const {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<T>(make());
    std::lock_guard lock(mu_);
    auto it = map_.emplace(key, std::move(value)).first;
    return *it->second;
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<Key, std::unique_ptr<T>> map_;
};

}  // namespace simpres

#endif  // SIMPRES_ONCE_CACHE_HPP
