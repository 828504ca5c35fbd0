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


// n-chains of a fixed P2 strategy and the greedy disjoint families H_n built
// from their tops.

#ifndef BMG_CHAINS_HPP
#define BMG_CHAINS_HPP

#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmg/ce_open.hpp"
#include "bmg/effective_sets.hpp"
#include "bmg/game.hpp"
#include "bmg/topology.hpp"

namespace bmg {

/// A play of length 2n consistent with a P2 strategy. `choices[i]` is the
/// dyadic sub-ball index P1 used at its (i+1)-th move.
struct Chain {
  std::vector<Move> moves;
  std::vector<std::size_t> choices;

  const BasicOpen& top() const { return moves.back().ball; }
};

namespace chains_detail {

inline Chain play_chain(const Strategy& p2, const Space& space, const std::vector<std::size_t>& choices) {
  Chain c;
  c.choices = choices;
  BasicOpen base = default_first_move(space);
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const BasicOpen& parent = i == 0 ? base : c.moves.back().ball;
    c.moves.push_back(Move{Player::p1, sub_ball(parent, choices[i]), {}});
    Response r = p2.respond(space, c.moves);
    c.moves.push_back(Move{Player::p2, std::move(r.ball), std::move(r.note)});
  }
  return c;
}

// Advances the later indices (positions 1..n-1) lexicographically below
// breadth; returns false when they wrap around.
inline bool advance_tail(std::vector<std::size_t>& idx, std::size_t breadth) {
  for (std::size_t k = idx.size(); k-- > 1;) {
    if (++idx[k] < breadth) return true;
    idx[k] = 0;
  }
  return false;
}

}  // namespace chains_detail

/// All n-chains whose P1 choices are among the first `breadth` dyadic
/// sub-balls at every position, in lexicographic order of the choices.
inline std::vector<Chain> enumerate_chains(const Strategy& p2, const Space& space, std::size_t n,
                                           std::size_t breadth) {
  std::vector<Chain> out;
  if (n == 0 || breadth == 0) return out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    out.push_back(chains_detail::play_chain(p2, space, idx));
    bool more = chains_detail::advance_tail(idx, breadth);
    if (!more) {
      if (++idx[0] >= breadth) break;
    }
  }
  return out;
}

/// Greedy pairwise-disjoint family of chain tops. The first P1 choice runs
/// over every dyadic sub-ball of the base move (index-major), later choices
/// stay below `breadth`; `fuel` bounds the number of chains examined, so a
/// larger fuel only extends the result.
inline std::vector<BasicOpen> build_Hn(const Strategy& p2, const Space& space, std::size_t n, std::size_t breadth,
                                       std::size_t fuel) {
  std::vector<BasicOpen> family;
  if (n == 0 || breadth == 0) return family;
  const bool line = space.kind == SpaceKind::euclidean && space.dim == 1;
  std::map<Rational, Rational> by_lower;  // lower end -> upper end (line only)
  auto disjoint_from_family = [&](const BasicOpen& b) {
    if (!line) {
      for (const auto& m : family) {
        if (!disjoint(m, b)) return false;
      }
      return true;
    }
    Rational lo = b.center[0] - b.radius, hi = b.center[0] + b.radius;
    auto it = by_lower.lower_bound(lo);
    if (it != by_lower.end() && it->first < hi) return false;
    if (it != by_lower.begin() && std::prev(it)->second > lo) return false;
    return true;
  };
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t examined = 0; examined < fuel; ++examined) {
    Chain c = chains_detail::play_chain(p2, space, idx);
    const BasicOpen& top = c.top();
    if (disjoint_from_family(top)) {
      family.push_back(top);
      if (line) by_lower.emplace(top.center[0] - top.radius, top.center[0] + top.radius);
    }
    if (!chains_detail::advance_tail(idx, breadth)) ++idx[0];
  }
  return family;
}

/// The finite union of an H_n family as a c.e. open set, with density
/// evidence that scans the family.
inline CeOpenSet union_Hn_set(const Space& space, std::vector<BasicOpen> family, std::size_t n) {
  CeOpenSet u = CeOpenSet::of(space, family, "H" + std::to_string(n));
  auto shared = std::make_shared<const std::vector<BasicOpen>>(std::move(family));
  u.set_density(DensityEvidence{shared->size(), [shared](const BasicOpen& target) -> std::optional<BasicOpen> {
                                  for (const auto& m : *shared) {
                                    if (intersects(m, target)) return m;
                                  }
                                  return std::nullopt;
                                }});
  return u;
}

/// Layer n is the complement witness of the union of H_n, built with
/// fuel_schedule(n) chains.
inline MeagerPresentation extract_meager_presentation(const Strategy& p2, const Space& space, std::size_t breadth,
                                                      std::function<std::size_t(std::size_t)> fuel_schedule) {
  struct Cache {
    std::mutex lock;
    std::map<std::size_t, EndWitness> layers;
  };
  auto cache = std::make_shared<Cache>();
  return MeagerPresentation{"extracted(" + p2.descriptor + ")",
                            [p2, space, breadth, fuel_schedule, cache](std::size_t n) {
                              std::lock_guard<std::mutex> guard(cache->lock);
                              auto it = cache->layers.find(n);
                              if (it != cache->layers.end()) return it->second;
                              auto fam = build_Hn(p2, space, n, breadth, fuel_schedule(n));
                              EndWitness w = end_from_dense_ce_open(union_Hn_set(space, std::move(fam), n));
                              cache->layers.emplace(n, w);
                              return w;
                            },
                            std::nullopt};
}

}  // namespace bmg

#endif  // BMG_CHAINS_HPP
