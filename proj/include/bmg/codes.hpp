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

// Binary names for naturals, rationals, tuples and basic open sets.
//
//   nat       Elias-gamma code of n+1: bin(n+1) preceded by len-1 zeros.
//   rational  sign bit (1 = negative), nat(|num|), nat(den-1); lowest terms.
//   pair      each bit of x doubled, the delimiter "01", then y verbatim.
//   tuple     left-nested pairs: <a,b,c> = pair(pair(a,b),c).
//   ball      pair(tuple(center...), rational(radius)).
//
// Every parse is total and single-pass, so membership in the domain of the
// ball representation is decidable. Non-canonical spellings (2/4, -0,
// torus centers outside [0,1)) are outside the domain, which makes the name
// of each ball unique.

#ifndef BMG_CODES_HPP
#define BMG_CODES_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/error.hpp"
#include "bmg/rational.hpp"

namespace bmg {

/// A finite binary string over {0,1}. Ordered length-lexicographically.
class Name {
 public:
  Name() = default;
  explicit Name(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
      if (c != '0' && c != '1') throw Error(ErrorCode::malformed_name, "non-binary character in name");
    }
  }

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  friend bool operator==(const Name&, const Name&) = default;
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

namespace codes_detail {

inline void append_nat(std::string& out, const Integer& n) {
  Integer m = n + 1;
  std::string bin = m.get_str(2);
  out.append(bin.size() - 1, '0');
  out += bin;
}

inline std::optional<Integer> read_nat(std::string_view bits, std::size_t& pos) {
  std::size_t zeros = 0;
  while (pos + zeros < bits.size() && bits[pos + zeros] == '0') ++zeros;
  if (pos + zeros >= bits.size()) return std::nullopt;
  if (bits.size() - (pos + zeros) < zeros + 1) return std::nullopt;
  Integer value(std::string(bits.substr(pos + zeros, zeros + 1)), 2);
  pos += 2 * zeros + 1;
  return value - 1;
}

inline void append_rational(std::string& out, const Rational& q) {
  out += q.sign() < 0 ? '1' : '0';
  append_nat(out, q.sign() < 0 ? Integer(-q.num()) : q.num());
  append_nat(out, q.den() - 1);
}

inline std::optional<Rational> read_rational(std::string_view bits, std::size_t& pos) {
  if (pos >= bits.size()) return std::nullopt;
  bool negative = bits[pos] == '1';
  ++pos;
  auto num = read_nat(bits, pos);
  if (!num) return std::nullopt;
  auto den_minus_one = read_nat(bits, pos);
  if (!den_minus_one) return std::nullopt;
  Integer den = *den_minus_one + 1;
  if (negative && *num == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num->get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(negative ? Integer(-*num) : *num, den);
}

inline std::optional<Rational> read_exact_rational(std::string_view bits) {
  std::size_t pos = 0;
  auto q = read_rational(bits, pos);
  if (!q || pos != bits.size()) return std::nullopt;
  return q;
}

}  // namespace codes_detail

inline Name encode_nat(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::invalid_config, "encode_nat of a negative number");
  std::string out;
  codes_detail::append_nat(out, n);
  return Name(std::move(out));
}

/// Inverse of encode_nat; the name must be exactly one code.
inline Integer decode_nat(const Name& name) {
  std::size_t pos = 0;
  auto n = codes_detail::read_nat(name.bits(), pos);
  if (!n || pos != name.size()) throw Error(ErrorCode::malformed_name, "not a natural-number code");
  return *n;
}

inline Name encode_rational(const Rational& q) {
  std::string out;
  codes_detail::append_rational(out, q);
  return Name(std::move(out));
}

inline Rational decode_rational(const Name& name) {
  auto q = codes_detail::read_exact_rational(name.bits());
  if (!q) throw Error(ErrorCode::malformed_name, "not a canonical rational code");
  return *q;
}

inline Name pair(const Name& x, const Name& y) {
  std::string out;
  out.reserve(2 * x.size() + 2 + y.size());
  for (char c : x.bits()) {
    out += c;
    out += c;
  }
  out += "01";
  out += y.bits();
  return Name(std::move(out));
}

inline std::optional<std::pair<Name, Name>> try_unpair(const Name& w) {
  const std::string& b = w.bits();
  std::string x;
  std::size_t i = 0;
  for (; i + 1 < b.size(); i += 2) {
    if (b[i] == b[i + 1]) {
      x += b[i];
    } else if (b[i] == '0') {
      return std::make_pair(Name(std::move(x)), Name(b.substr(i + 2)));
    } else {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::pair<Name, Name> unpair(const Name& w) {
  auto p = try_unpair(w);
  if (!p) throw Error(ErrorCode::malformed_name, "no pair delimiter in '" + w.bits() + "'");
  return *std::move(p);
}

inline Name tuple(std::span<const Name> parts) {
  if (parts.empty()) throw Error(ErrorCode::invalid_config, "empty tuple");
  Name acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = pair(acc, parts[i]);
  return acc;
}

inline std::optional<std::vector<Name>> try_untuple(const Name& w, std::size_t arity) {
  if (arity == 0) return std::nullopt;
  std::vector<Name> parts(arity);
  Name rest = w;
  for (std::size_t i = arity - 1; i > 0; --i) {
    auto p = try_unpair(rest);
    if (!p) return std::nullopt;
    parts[i] = std::move(p->second);
    rest = std::move(p->first);
  }
  parts[0] = std::move(rest);
  return parts;
}

inline std::vector<Name> untuple(const Name& w, std::size_t arity) {
  auto parts = try_untuple(w, arity);
  if (!parts) throw Error(ErrorCode::malformed_name, "not a " + std::to_string(arity) + "-tuple");
  return *std::move(parts);
}

/// Canonical name of a basic open set.
inline Name nu_encode(const BasicOpen& b) {
  std::vector<Name> coords;
  coords.reserve(b.dim());
  for (const auto& c : b.center) coords.push_back(encode_rational(c));
  return pair(tuple(coords), encode_rational(b.radius));
}

/// Decodes a name in `space`, or reports why it lies outside the domain.
inline std::pair<std::optional<BasicOpen>, ErrorCode> nu_parse(const Space& space, const Name& w) {
  auto outer = try_unpair(w);
  if (!outer) return {std::nullopt, ErrorCode::malformed_name};
  auto radius = codes_detail::read_exact_rational(outer->second.bits());
  if (!radius) return {std::nullopt, ErrorCode::malformed_name};
  auto parts = try_untuple(outer->first, space.dim);
  if (!parts) return {std::nullopt, ErrorCode::malformed_name};
  BasicOpen b;
  b.kind = space.kind;
  b.radius = *radius;
  for (const auto& part : *parts) {
    auto c = codes_detail::read_exact_rational(part.bits());
    if (!c) return {std::nullopt, ErrorCode::malformed_name};
    b.center.push_back(*std::move(c));
  }
  if (auto v = basis_violation(b)) return {std::nullopt, *v};
  return {std::move(b), ErrorCode::malformed_name};
}

inline std::optional<BasicOpen> try_nu_decode(const Space& space, const Name& w) {
  return nu_parse(space, w).first;
}

inline BasicOpen nu_decode(const Space& space, const Name& w) {
  auto [b, why] = nu_parse(space, w);
  if (!b) {
    throw Error(why, why == ErrorCode::non_positive_radius ? "radius must be positive"
                                                            : "name outside the domain of the representation");
  }
  return *std::move(b);
}

inline bool in_domain(const Space& space, const Name& w) { return try_nu_decode(space, w).has_value(); }

}  // namespace bmg

#endif  // BMG_CODES_HPP
