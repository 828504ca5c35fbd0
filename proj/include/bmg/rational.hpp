// Copyright 2026 The bmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMG_RATIONAL_HPP
#define BMG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/error.hpp"

namespace bmg {

using Integer = mpz_class;

inline Integer integer_from_string(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::parse_error, "bad integer '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::parse_error, "bad integer '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}
  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error(ErrorCode::invalid_config, "zero denominator");
    normalize();
  }

  /// Parses "p/q" or a bare integer "p".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(integer_from_string(text));
    Integer num = integer_from_string(text.substr(0, slash));
    Integer den = integer_from_string(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_integer() const { return den_ == 1; }

  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
  }
  Integer ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
  }

  /// Always renders as "p/q", including integers ("3/1").
  std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(ErrorCode::invalid_config, "division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  struct raw_tag {};
  Rational(Integer num, Integer den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1 && g != 0) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  Integer num_;
  Integer den_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// q^k for k >= 0.
inline Rational pow(const Rational& q, unsigned long k) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), k);
  return Rational(std::move(n), std::move(d));
}

/// 1 / q^k for a positive integer q.
inline Rational inverse_power(const Integer& q, unsigned long k) {
  Integer d;
  mpz_pow_ui(d.get_mpz_t(), q.get_mpz_t(), k);
  return Rational(Integer(1), std::move(d));
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(q.floor()); }

using Point = std::vector<Rational>;

inline std::string join(const std::vector<Rational>& values, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

}  // namespace bmg

#endif  // BMG_RATIONAL_HPP
