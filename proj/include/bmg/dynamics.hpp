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


// Computable homeomorphisms that map basic opens to basic opens, wandering
// probes, and the recurrence strategy for P2.

#ifndef BMG_DYNAMICS_HPP
#define BMG_DYNAMICS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/ce_open.hpp"
#include "bmg/game.hpp"
#include "bmg/rational.hpp"
#include "bmg/topology.hpp"

namespace bmg {

struct Homeomorphism {
  std::string descriptor;
  Space space;
  std::function<BasicOpen(const BasicOpen&)> forward;
  std::function<BasicOpen(const BasicOpen&)> backward;
};

/// Rotation of the torus by rho (components in [0,1)).
inline Homeomorphism rotation_system(Point rho) {
  for (const auto& r : rho) {
    if (r.sign() < 0 || r >= Rational(1)) throw Error(ErrorCode::invalid_config, "rotation components lie in [0,1)");
  }
  std::size_t dim = rho.size();
  auto shift = [](const Point& by) {
    return [by](const BasicOpen& b) {
      Point c = b.center;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += by[i];
      return arc(std::move(c), b.radius);
    };
  };
  Point minus;
  for (const auto& r : rho) minus.push_back(-r);
  return Homeomorphism{"rotation rho=" + join(rho, ','), Space::torus(dim), shift(rho), shift(minus)};
}

/// Translation of Euclidean space by v.
inline Homeomorphism translation_system(Point v) {
  std::size_t dim = v.size();
  auto shift = [](const Point& by) {
    return [by](const BasicOpen& b) {
      Point c = b.center;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += by[i];
      return ball(std::move(c), b.radius);
    };
  };
  Point minus;
  for (const auto& x : v) minus.push_back(-x);
  return Homeomorphism{"translation v=" + join(v, ','), Space::euclidean(dim), shift(v), shift(minus)};
}

inline Homeomorphism identity_system(Space space) {
  auto id = [](const BasicOpen& b) { return b; };
  return Homeomorphism{"identity", std::move(space), id, id};
}

/// Torus map x ↦ y with y_i = s_i(x_perm[i]), where s_i is x ↦ 1 - x (mod 1)
/// when reflect[i] is set and the identity otherwise.
inline Homeomorphism permutation_system(std::vector<std::size_t> perm, std::vector<bool> reflect) {
  std::size_t dim = perm.size();
  if (reflect.size() != dim) throw Error(ErrorCode::invalid_config, "reflect mask size");
  std::vector<std::size_t> inverse(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (perm[i] >= dim || inverse[perm[i]] != dim) throw Error(ErrorCode::invalid_config, "not a permutation");
    inverse[perm[i]] = i;
  }
  auto fwd = [perm, reflect](const BasicOpen& b) {
    Point c(b.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = reflect[i] ? -b.center[perm[i]] : b.center[perm[i]];
    return arc(std::move(c), b.radius);
  };
  auto bwd = [inverse, reflect](const BasicOpen& b) {
    Point c(b.dim());
    for (std::size_t j = 0; j < c.size(); ++j) {
      std::size_t i = inverse[j];
      c[j] = reflect[i] ? -b.center[i] : b.center[i];
    }
    return arc(std::move(c), b.radius);
  };
  std::string desc = "permutation perm=";
  for (std::size_t i = 0; i < dim; ++i) desc += (i ? "," : "") + std::to_string(perm[i]);
  desc += " reflect=";
  for (std::size_t i = 0; i < dim; ++i) desc += (i ? "," : "") + std::string(reflect[i] ? "1" : "0");
  return Homeomorphism{std::move(desc), Space::torus(dim), fwd, bwd};
}

inline BasicOpen iterate_forward(const Homeomorphism& t, BasicOpen b, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) b = t.forward(b);
  return b;
}

inline BasicOpen iterate_backward(const Homeomorphism& t, BasicOpen b, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) b = t.backward(b);
  return b;
}

/// T^-k(U): every emission pulled back k times.
inline CeOpenSet preimage_ce(const Homeomorphism& t, const CeOpenSet& u, std::size_t k) {
  if (k == 0) return u;
  auto bwd = t.backward;
  return map_emissions(
      u, [bwd, k](const BasicOpen& b) {
        BasicOpen out = b;
        for (std::size_t i = 0; i < k; ++i) out = bwd(out);
        return out;
      },
      "T^-" + std::to_string(k) + "(" + u.descriptor() + ")");
}

struct WanderingResult {
  bool not_wandering = false;
  std::size_t j = 0;  // first return time when not_wandering

  std::string str() const { return not_wandering ? "NotWandering(" + std::to_string(j) + ")" : "Unknown"; }
};

/// First j <= horizon with T^-j(E) ∩ E ≠ ∅, judged on the emissions seen
/// within `fuel` tokens of each set.
inline WanderingResult wandering_probe(const Homeomorphism& t, const CeOpenSet& e, std::size_t horizon,
                                       std::size_t fuel) {
  std::vector<BasicOpen> base = e.emissions(fuel);
  for (std::size_t j = 1; j <= horizon; ++j) {
    std::vector<BasicOpen> pulled = preimage_ce(t, e, j).emissions(fuel);
    for (const auto& a : pulled) {
      for (const auto& b : base) {
        if (intersects(a, b)) return WanderingResult{true, j};
      }
    }
  }
  return {};
}

struct AvoidanceSet {
  std::size_t n = 0;
  CeOpenSet h;
};

/// H = E ∩ T^-(n+1)(E); it misses F_n(E), the points of E that never return
/// to E after step n.
inline AvoidanceSet fn_avoidance(const Homeomorphism& t, const CeOpenSet& e, std::size_t n) {
  return AvoidanceSet{n, intersect_ce(e, preimage_ce(t, e, n + 1))};
}

/// P2 for the recurrence game. At round r it dovetails the searches of
/// H_n ∩ G over n = r, r+1, ... (G = P1's last move) and answers with the
/// first ball found, annotated with n and the return time j = n+1. A move
/// disjoint from a finite E is answered with itself. Running out of fuel
/// raises AvoidanceSearchExhausted.
inline Strategy recurrence_p2_strategy(const Homeomorphism& t, const CeOpenSet& e, std::size_t fuel) {
  return Strategy{
      Player::p2, "recurrence-p2(" + t.descriptor + ")", [t, e, fuel](const Space& space, std::span<const Move> h) {
        std::size_t round = h.size() / 2 + 1;
        const BasicOpen& g = h.back().ball;
        if (auto finite = e.finite_emissions(fuel)) {
          bool meets = false;
          for (const auto& b : *finite) meets = meets || intersects(b, g);
          if (!meets) {
            Annotation note;
            note.add("outside", "E");
            return Response{g, std::move(note)};
          }
        }
        CeOpenSet target = CeOpenSet::of(space, {g}, "G");
        std::vector<std::pair<std::size_t, Stream>> searches;
        std::size_t next_n = round;
        std::size_t spent = 0;
        while (spent < fuel) {
          searches.emplace_back(next_n, intersect_ce(fn_avoidance(t, e, next_n).h, target).stream());
          ++next_n;
          std::vector<std::pair<std::size_t, Stream>> alive;
          for (auto& [n, s] : searches) {
            if (spent >= fuel) break;
            ++spent;
            Token tok = s();
            if (tok.kind == Token::Kind::emit) {
              Annotation note;
              note.add("n", std::to_string(n)).add("j", std::to_string(n + 1));
              return Response{*std::move(tok.ball), std::move(note)};
            }
            if (tok.kind == Token::Kind::skip) alive.emplace_back(n, std::move(s));
          }
          searches = std::move(alive);
        }
        throw Error(ErrorCode::avoidance_search_exhausted,
                    "no ball of E ∩ T^-(n+1)(E) inside the move found within fuel " + std::to_string(fuel) +
                        " (wandering set, or fuel too small)",
                    round);
      }};
}

}  // namespace bmg

#endif  // BMG_DYNAMICS_HPP
