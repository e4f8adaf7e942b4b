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

#ifndef SIMPRES_SCALAR_HPP
#define SIMPRES_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "simpres/errors.hpp"


namespace simpres {

class Scalar;

/// The ground field: either the rationals or Z/p for a prime p < 2^32.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  /// Exact parse of "n", "-n" or "n/d". Throws ParseError on malformed
  /// input or a zero denominator.
  Scalar parse(std::string_view text) const;

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals keep an int64 fast path and promote to
/// GMP on overflow; values that fit back into int64 are always demoted, so
/// representations are canonical and equality is structural.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Bit length of the stored representation; drives pivot selection.
  std::size_t size_hint() const;

  /// "n" or "n/d" for rationals, the canonical residue for Z/p.
  std::string to_string() const;

 private:
  friend class Field;
  struct Big;

  void set_small(__int128 num, __int128 den);
  void set_from_big(const Big& b);
  Big to_big() const;
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::int64_t num_ = 0;  // residue in [0, p) for Z/p
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace simpres

#endif  // SIMPRES_SCALAR_HPP
