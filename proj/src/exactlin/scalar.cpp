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

#include "simpres/scalar.hpp"

#include <gmpxx.h>

#include <bit>
#include <charconv>
#include <limits>
#include <ostream>

namespace simpres {

struct Scalar::Big {
  mpq_class q;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(i128 v, std::uint64_t p) {
  i128 r = v % i128(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

bool mpz_fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime_number(p))
    throw ValidationError("field characteristic " + std::to_string(p) +
                          " is not a prime below 2^32");
  return Field{p};
}

Scalar Field::zero() const {
  Scalar s;
  s.field_ = *this;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s;
  s.field_ = *this;
  if (is_prime())
    s.num_ = static_cast<std::int64_t>(reduce_mod(v, modulus_));
  else
    s.num_ = v;
  return s;
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DomainError("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view text) const {
  auto bad = [&]() { return ParseError("malformed scalar \"" + std::string(text) + "\""); };
  auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (num_part.empty() || (slash != std::string_view::npos && den_part.empty())) throw bad();

  auto parse_int = [&](std::string_view s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw bad();
    for (std::size_t k = start; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw bad();
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };

  mpz_class n = parse_int(num_part, true);
  mpz_class d = den_part.empty() ? mpz_class(1) : parse_int(den_part, false);
  if (d == 0)
    throw ParseError("malformed scalar \"" + std::string(text) + "\": zero denominator");

  if (is_prime()) {
    mpz_class p(static_cast<unsigned long>(modulus_));
    mpz_class nr = n % p, dr = d % p;
    if (nr < 0) nr += p;
    if (dr == 0)
      throw ParseError("scalar \"" + std::string(text) + "\" has a denominator divisible by " +
                       std::to_string(modulus_));
    return from_int(nr.get_si()) / from_int(dr.get_si());
  }
  Scalar s = zero();
  Scalar::Big b{mpq_class(n, d)};
  b.q.canonicalize();
  s.set_from_big(b);
  return s;
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(modulus_);
}

// ---------------------------------------------------------------------------

void Scalar::set_small(i128 num, i128 den) {
  big_.reset();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  u128 g = gcd128(abs128(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  if (fits64(num) && fits64(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return;
  }
  // Promote: build the mpq from the 128-bit halves.
  auto to_mpz128 = [](i128 v) {
    bool neg = v < 0;
    u128 a = abs128(v);
    mpz_class hi(static_cast<unsigned long>(a >> 64));
    mpz_class lo(static_cast<unsigned long>(a & ~std::uint64_t{0}));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  Big b{mpq_class(to_mpz128(num), to_mpz128(den))};
  b.q.canonicalize();
  big_ = std::make_shared<const Big>(std::move(b));
  num_ = 0;
  den_ = 1;
}

void Scalar::set_from_big(const Big& b) {
  const mpz_class& n = b.q.get_num();
  const mpz_class& d = b.q.get_den();
  if (mpz_fits64(n) && mpz_fits64(d)) {
    big_.reset();
    num_ = n.get_si();
    den_ = d.get_si();
    return;
  }
  big_ = std::make_shared<const Big>(b);
  num_ = 0;
  den_ = 1;
}

Scalar::Big Scalar::to_big() const {
  if (big_) return *big_;
  Big b{mpq_class(to_mpz(num_), to_mpz(den_))};
  return b;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw DomainError("arithmetic across fields " + field_.name() + " and " + o.field_.name());
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    std::uint64_t p = field_.characteristic();
    r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(p - std::uint64_t(num_));
    return r;
  }
  if (big_) {
    Big b{-big_->q};
    r.set_from_big(b);
    return r;
  }
  r.set_small(-i128(num_), den_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime()) {
    std::uint64_t p = field_.characteristic();
    std::uint64_t s = std::uint64_t(num_) + std::uint64_t(o.num_);
    num_ = static_cast<std::int64_t>(s >= p ? s - p : s);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      set_small(i128(num_) + o.num_, 1);
      return *this;
    }
    set_small(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
  }
  Big b{to_big().q + o.to_big().q};
  set_from_big(b);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime()) {
    num_ = static_cast<std::int64_t>(
        mulmod(std::uint64_t(num_), std::uint64_t(o.num_), field_.characteristic()));
    return *this;
  }
  if (!big_ && !o.big_) {
    set_small(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
  }
  Big b{to_big().q * o.to_big().q};
  set_from_big(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r = *this;
  if (field_.is_prime()) {
    std::uint64_t p = field_.characteristic();
    r.num_ = static_cast<std::int64_t>(powmod(std::uint64_t(num_), p - 2, p));
    return r;
  }
  if (big_) {
    Big b{1 / big_->q};
    r.set_from_big(b);
    return r;
  }
  r.set_small(den_, num_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = field_.one();
  Scalar b = *this;
  while (e != 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return a.big_->q == b.big_->q;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::size_t Scalar::size_hint() const {
  if (field_.is_prime()) return 1;
  if (big_)
    return mpz_sizeinbase(big_->q.get_num_mpz_t(), 2) + mpz_sizeinbase(big_->q.get_den_mpz_t(), 2);
  auto bits = [](std::int64_t v) {
    std::uint64_t a = v < 0 ? std::uint64_t(-(v + 1)) + 1 : std::uint64_t(v);
    return static_cast<std::size_t>(std::bit_width(a));
  };
  return bits(num_) + bits(den_);
}

std::string Scalar::to_string() const {
  if (big_) return big_->q.get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace simpres
