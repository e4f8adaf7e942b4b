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

#ifndef SIMPRES_ERRORS_HPP
#define SIMPRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simpres {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid mathematical input (bad dimensions, non-central
/// epsilon, wrong module side, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic domain violation, e.g. division by zero or mixing fields.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds the configured dimension cap.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (d∘d != 0, an induced map that is not
/// well defined, ...). Never silently ignored.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace simpres

#endif  // SIMPRES_ERRORS_HPP
