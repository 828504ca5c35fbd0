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


// Liouville numbers as a dense G-delta: the layers
//   U_n = union over p/q (q >= 2) of (p/q - q^-n, p/q + q^-n),
// the P2 strategy that forces the play into every U_k, and exact checking of
// the Diophantine certificate that the play records.

#ifndef BMG_LIOUVILLE_HPP
#define BMG_LIOUVILLE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmg/ce_open.hpp"
#include "bmg/effective_sets.hpp"
#include "bmg/game.hpp"
#include "bmg/rational.hpp"
#include "bmg/stern_brocot.hpp"
#include "bmg/topology.hpp"

namespace bmg {

inline BasicOpen liouville_interval(const Integer& p, const Integer& q, unsigned long n) {
  return ball(Rational(p, q), inverse_power(q, n));
}

/// U_n enumerated diagonally over s = |p| + q (q >= 2, p = +|p| before -|p|),
/// non-reduced fractions included. Intervals disjoint from the region are
/// skipped, never clipped, so every emission has radius exactly q^-n.
inline CeOpenSet layer_enumerate(unsigned long n, const Space& space = Space::line(0, 1)) {
  if (n == 0) throw Error(ErrorCode::invalid_config, "Liouville layers start at n = 1");
  if (space.kind != SpaceKind::euclidean || space.dim != 1)
    throw Error(ErrorCode::dimension_mismatch, "Liouville layers live on the real line");
  auto meets_region = [space](const BasicOpen& b) {
    if (space.whole()) return true;
    for (const auto& r : space.region) {
      if (intersects(b, r)) return true;
    }
    return false;
  };
  CeOpenSet u(space, "U" + std::to_string(n), [n, meets_region]() -> Stream {
    struct Cursor {
      Integer s = 2, q = 2;
      bool negative = false;
    };
    auto cur = std::make_shared<Cursor>();
    return [n, meets_region, cur]() -> Token {
      Integer abs_p = cur->s - cur->q;
      Integer p = cur->negative ? Integer(-abs_p) : abs_p;
      Integer q = cur->q;
      if (!cur->negative && abs_p != 0) {
        cur->negative = true;
      } else {
        cur->negative = false;
        if (++cur->q > cur->s) {
          ++cur->s;
          cur->q = 2;
        }
      }
      BasicOpen b = liouville_interval(p, q, n);
      if (!meets_region(b)) return Token::skip();
      return Token::emit(std::move(b));
    };
  });
  u.set_membership([](const Point&) { return true; });  // every rational lies in U_n
  u.set_density(DensityEvidence{1, [n](const BasicOpen& target) -> std::optional<BasicOpen> {
                                  auto [p, q] = simplest_fraction_q2(target.center[0] - target.radius,
                                                                     target.center[0] + target.radius);
                                  return liouville_interval(p, q, n);
                                }});
  return u;
}

/// Layer n is the complement of U_n, witnessed through its density.
inline MeagerPresentation liouville_presentation(const Space& space = Space::line(0, 1)) {
  return MeagerPresentation{"liouville-complement",
                            [space](std::size_t n) { return end_from_dense_ce_open(layer_enumerate(n, space)); },
                            std::nullopt};
}

namespace liouville_detail {

/// Smallest N >= 2 with N^k >= x.
inline Integer min_base(const Rational& x, unsigned long k) {
  Integer c = x.ceil();
  if (c < 1) c = 1;
  Integer root;
  mpz_root(root.get_mpz_t(), c.get_mpz_t(), k);
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), root.get_mpz_t(), k);
  if (power < c) root += 1;
  if (root < 2) root = 2;
  return root;
}

}  // namespace liouville_detail

/// Round k answer inside the interval g: the simplest rational r of g's open
/// middle third, spelled p/q with q large enough that (r - q^-k, r + q^-k)
/// still fits inside g.
inline Response liouville_response(const BasicOpen& g, unsigned long k) {
  if (g.kind != SpaceKind::euclidean || g.dim() != 1)
    throw Error(ErrorCode::dimension_mismatch, "the Liouville strategy plays on the real line");
  Rational a = g.center[0] - g.radius, b = g.center[0] + g.radius;
  Rational third = (b - a) / Rational(3);
  Rational r = simplest_between(a + third, b - third);
  Integer p0 = r.is_integer() ? Integer(r.num() * 2) : r.num();
  Integer q0 = r.is_integer() ? Integer(2) : r.den();
  Rational slack = min(r - a, b - r);
  Integer big_n = liouville_detail::min_base(Rational(1) / slack, k);
  Integer t = Rational(big_n, q0).ceil();
  Integer p = p0 * t, q = q0 * t;
  Annotation note;
  note.add("k", std::to_string(k)).add("p", p.get_str()).add("q", q.get_str());
  return Response{ball(r, inverse_power(q, k)), std::move(note)};
}

inline Strategy liouville_p2_strategy() {
  return Strategy{Player::p2, "liouville-p2", [](const Space&, std::span<const Move> h) {
                    return liouville_response(h.back().ball, h.size() / 2 + 1);
                  }};
}

struct CertificateRound {
  std::size_t j = 0;
  Integer p, q;
  Rational center, radius;

  friend bool operator==(const CertificateRound&, const CertificateRound&) = default;
};

using Certificate = std::vector<CertificateRound>;

/// The Diophantine rounds recorded in a play's P2 annotations.
inline Certificate certificate_from(std::span<const Move> moves) {
  Certificate c;
  for (const auto& m : moves) {
    if (m.player != Player::p2) continue;
    auto k = m.note.get("k"), p = m.note.get("p"), q = m.note.get("q");
    if (!k || !p || !q) continue;
    c.push_back(CertificateRound{std::stoul(*k), integer_from_string(*p), integer_from_string(*q),
                                 m.ball.center.at(0), m.ball.radius});
  }
  return c;
}

struct CertificateVerdict {
  bool ok = true;
  std::size_t failing_round = 0;
  std::string reason;
};

/// Exact check of every round: j runs 1, 2, ...; q > 1; the round interval
/// lies inside (p/q - q^-j, p/q + q^-j) and inside the previous round's
/// interval.
inline CertificateVerdict check_certificate(const Certificate& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& row = c[i];
    auto fail = [&](std::string why) { return CertificateVerdict{false, i + 1, std::move(why)}; };
    if (row.j != i + 1) return fail("round index " + std::to_string(row.j) + " out of sequence");
    if (row.q <= 1) return fail("denominator must exceed 1");
    if (row.radius.sign() <= 0) return fail("radius must be positive");
    Rational target(row.p, row.q);
    Rational bound = inverse_power(row.q, row.j);
    if (abs(row.center - target) + row.radius > bound)
      return fail("interval leaves (p/q - q^-j, p/q + q^-j)");
    if (i > 0) {
      const auto& prev = c[i - 1];
      if (abs(row.center - prev.center) + row.radius > prev.radius) return fail("interval not nested in previous round");
    }
  }
  return {};
}

}  // namespace bmg

#endif  // BMG_LIOUVILLE_HPP
