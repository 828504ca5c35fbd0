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


#ifndef BMG_STERN_BROCOT_HPP
#define BMG_STERN_BROCOT_HPP

#include <utility>
#include <vector>

#include "bmg/error.hpp"
#include "bmg/rational.hpp"

namespace bmg {

namespace stern_brocot_detail {

// Simplest rational in the open interval (a, b) with 0 <= a < b. `b_inf`
// stands for b = +infinity.
inline Rational simplest_nonneg(Rational a, Rational b, bool b_inf) {
  // Continued-fraction walk: collect the shared integer parts t_i of a and b,
  // then close with the first integer that separates them.
  std::vector<Integer> terms;
  for (;;) {
    Integer fl = a.floor();
    if (b_inf || Rational(fl + 1) < b) {
      terms.push_back(fl + 1);
      break;
    }
    // a and b share the integer part fl, and b <= fl + 1.
    terms.push_back(fl);
    Rational ra = a - Rational(fl);
    Rational rb = b - Rational(fl);
    // Recurse on (1/rb, 1/ra); ra == 0 gives an unbounded right end.
    Rational next_a = Rational(1) / rb;
    if (ra.sign() == 0) {
      b_inf = true;
      a = next_a;
    } else {
      a = next_a;
      b = Rational(1) / ra;
      b_inf = false;
    }
  }
  Rational x(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) x = Rational(terms[i]) + Rational(1) / x;
  return x;
}

}  // namespace stern_brocot_detail

/// The rational with the smallest denominator in the open interval (a, b),
/// ties broken by smallest absolute numerator. Exactly the first rational met
/// by a Stern-Brocot descent.
inline Rational simplest_between(const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorCode::invalid_config, "empty interval (" + a.str() + ", " + b.str() + ")");
  if (a.sign() < 0 && b.sign() > 0) return Rational(0);
  if (b.sign() <= 0) return -stern_brocot_detail::simplest_nonneg(-b, -a, false);
  return stern_brocot_detail::simplest_nonneg(a, b, false);
}

/// Spelling (p, q) of the simplest rational in (a, b) with q >= 2; an integer
/// m is spelled 2m/2.
inline std::pair<Integer, Integer> simplest_fraction_q2(const Rational& a, const Rational& b) {
  Rational r = simplest_between(a, b);
  if (r.is_integer()) return {r.num() * 2, Integer(2)};
  return {r.num(), r.den()};
}

}  // namespace bmg

#endif  // BMG_STERN_BROCOT_HPP
