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

// Decidable relations between basic open sets.
//
// Balls are l-infinity boxes, so every relation reduces to per-coordinate
// rational comparisons. On the torus, coordinate offsets are wrapped into
// [-1/2, 1/2); since every radius is below 1/2 the wrapped offset is the only
// one that matters.

#ifndef BMG_TOPOLOGY_HPP
#define BMG_TOPOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/codes.hpp"
#include "bmg/error.hpp"
#include "bmg/rational.hpp"

namespace bmg {

/// Reduces d into [-1/2, 1/2).
inline Rational wrap_offset(const Rational& d) {
  Rational shifted = d + half();
  return shifted - Rational(shifted.floor()) - half();
}

/// Signed offset from a to b along one coordinate.
inline Rational coordinate_offset(SpaceKind kind, const Rational& a, const Rational& b) {
  return kind == SpaceKind::torus ? wrap_offset(b - a) : b - a;
}

inline void require_comparable(const BasicOpen& a, const BasicOpen& b) {
  if (a.kind != b.kind || a.dim() != b.dim())
    throw Error(ErrorCode::dimension_mismatch, "basic opens live in different spaces");
}

inline bool disjoint(const BasicOpen& a, const BasicOpen& b) {
  require_comparable(a, b);
  Rational reach = a.radius + b.radius;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (abs(coordinate_offset(a.kind, a.center[i], b.center[i])) >= reach) return true;
  }
  return false;
}

inline bool intersects(const BasicOpen& a, const BasicOpen& b) { return !disjoint(a, b); }

/// a is a subset of b.
inline bool subset(const BasicOpen& a, const BasicOpen& b) {
  require_comparable(a, b);
  if (a.radius > b.radius) return false;
  Rational room = b.radius - a.radius;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (abs(coordinate_offset(a.kind, b.center[i], a.center[i])) > room) return false;
  }
  return true;
}

/// The closure of a is a proper subset of b.
inline bool closure_strictly_inside(const BasicOpen& a, const BasicOpen& b) {
  require_comparable(a, b);
  if (a.radius >= b.radius) return false;
  Rational room = b.radius - a.radius;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (abs(coordinate_offset(a.kind, b.center[i], a.center[i])) >= room) return false;
  }
  return true;
}

inline bool contains(const BasicOpen& b, const Point& x) {
  if (x.size() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "point dimension");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (abs(coordinate_offset(b.kind, b.center[i], x[i])) >= b.radius) return false;
  }
  return true;
}

/// Diameter in the max-coordinate metric. For torus boxes the extent is
/// measured along the box itself, which never wraps (radius < 1/2).
inline Rational diameter(const BasicOpen& a) { return a.radius * Rational(2); }

inline bool region_contains(const Space& space, const BasicOpen& b) {
  if (space.whole()) return true;
  return std::any_of(space.region.begin(), space.region.end(),
                     [&](const BasicOpen& r) { return subset(b, r); });
}

namespace topology_detail {

struct Span {
  Rational lo, hi;
};

// Pieces of the intersection of two coordinate intervals (lifted to R on the
// torus, expressed relative to a's center frame).
inline std::vector<Span> coordinate_pieces(SpaceKind kind, const Rational& ca, const Rational& ra,
                                           const Rational& cb, const Rational& rb) {
  std::vector<Span> out;
  Rational alo = ca - ra, ahi = ca + ra;
  auto add = [&](const Rational& c) {
    Rational lo = max(alo, c - rb), hi = min(ahi, c + rb);
    if (lo < hi) out.push_back({lo, hi});
  };
  if (kind == SpaceKind::euclidean) {
    add(cb);
  } else {
    Rational base = ca + wrap_offset(cb - ca);
    for (long shift : {-1L, 0L, 1L}) add(base + Rational(shift));
    std::sort(out.begin(), out.end(), [](const Span& x, const Span& y) { return x.lo < y.lo; });
  }
  return out;
}

inline BasicOpen box_from(SpaceKind kind, Point center, Rational radius) {
  if (kind == SpaceKind::torus) return arc(std::move(center), std::move(radius));
  return ball(std::move(center), std::move(radius));
}

}  // namespace topology_detail

/// Lazily enumerates basic opens whose union is u ∩ v. A rectangular piece
/// that is already a cube is emitted as a single ball; other pieces are
/// exhausted by dyadic grids of cubes at levels s = 0, 1, 2, ...
/// Copies restart independently.
class IntersectionEnumerator {
 public:
  IntersectionEnumerator(const BasicOpen& u, const BasicOpen& v) : kind_(u.kind) {
    require_comparable(u, v);
    // Cartesian product of the per-coordinate pieces.
    std::vector<std::vector<topology_detail::Span>> boxes{{}};
    for (std::size_t i = 0; i < u.dim(); ++i) {
      auto pieces = topology_detail::coordinate_pieces(u.kind, u.center[i], u.radius, v.center[i], v.radius);
      if (pieces.empty()) return;
      std::vector<std::vector<topology_detail::Span>> grown;
      for (const auto& partial : boxes) {
        for (const auto& s : pieces) {
          grown.push_back(partial);
          grown.back().push_back(s);
        }
      }
      boxes = std::move(grown);
    }
    for (auto& sides : boxes) pieces_.push_back(Piece{std::move(sides), false, Rational()});
    for (auto& p : pieces_) {
      Rational half_width = (p.sides[0].hi - p.sides[0].lo) * half();
      p.is_cube = std::all_of(p.sides.begin(), p.sides.end(), [&](const topology_detail::Span& s) {
        return (s.hi - s.lo) * half() == half_width;
      });
      p.min_half_width = half_width;
      for (const auto& s : p.sides) p.min_half_width = min(p.min_half_width, (s.hi - s.lo) * half());
    }
  }

  /// Next ball, or nothing once the enumeration is exhausted (only possible
  /// when every piece is a cube).
  std::optional<BasicOpen> next() {
    while (cube_cursor_ < pieces_.size()) {
      const Piece& p = pieces_[cube_cursor_++];
      if (p.is_cube) return emit_cube(p);
    }
    if (grid_.empty()) {
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!pieces_[i].is_cube) grid_.push_back(GridState{i, 0, {}, false});
      }
      if (grid_.empty()) return std::nullopt;
    }
    GridState& g = grid_[grid_turn_ % grid_.size()];
    ++grid_turn_;
    return emit_grid(g);
  }

  bool empty_intersection() const { return pieces_.empty(); }

 private:
  struct Piece {
    std::vector<topology_detail::Span> sides;
    bool is_cube = false;
    Rational min_half_width;
  };
  struct GridState {
    std::size_t piece;
    unsigned long level;
    std::vector<Integer> index;
    bool started;
  };

  BasicOpen emit_cube(const Piece& p) const {
    Point c;
    for (const auto& s : p.sides) c.push_back((s.lo + s.hi) * half());
    return topology_detail::box_from(kind_, std::move(c), (p.sides[0].hi - p.sides[0].lo) * half());
  }

  BasicOpen emit_grid(GridState& g) const {
    const Piece& p = pieces_[g.piece];
    Rational rho = p.min_half_width * inverse_power(Integer(2), g.level);
    auto count = [&](std::size_t i) {
      // Centers lo + rho*(t+1), t = 0..count-1, keep the cube inside the side.
      Rational steps = (p.sides[i].hi - p.sides[i].lo) / rho;
      return Integer(steps.floor() - 1);
    };
    if (!g.started) {
      g.index.assign(p.sides.size(), Integer(0));
      g.started = true;
    } else {
      std::size_t k = p.sides.size();
      bool carried_out = true;
      while (k > 0) {
        --k;
        g.index[k] += 1;
        if (g.index[k] < count(k)) {
          carried_out = false;
          break;
        }
        g.index[k] = 0;
      }
      if (carried_out) {
        ++g.level;
        rho = p.min_half_width * inverse_power(Integer(2), g.level);
        g.index.assign(p.sides.size(), Integer(0));
      }
    }
    Point c;
    for (std::size_t i = 0; i < p.sides.size(); ++i) {
      c.push_back(p.sides[i].lo + rho * Rational(g.index[i] + 1));
    }
    return topology_detail::box_from(kind_, std::move(c), rho);
  }

  SpaceKind kind_;
  std::vector<Piece> pieces_;
  std::size_t cube_cursor_ = 0;
  std::vector<GridState> grid_;
  std::size_t grid_turn_ = 0;
};

inline IntersectionEnumerator intersect_enumerate(const BasicOpen& u, const BasicOpen& v) {
  return IntersectionEnumerator(u, v);
}

/// Semi-decides whether ν(u) ∩ ν(v) is non-empty: Yes carries a witness name
/// w with ν(w) ⊆ ν(u) ∩ ν(v); nothing means Unknown after `fuel` steps.
inline std::optional<Name> intersects_semidecide(const Space& space, const Name& u, const Name& v,
                                                 std::size_t fuel) {
  BasicOpen a = nu_decode(space, u);
  BasicOpen b = nu_decode(space, v);
  auto e = intersect_enumerate(a, b);
  for (std::size_t step = 0; step < fuel; ++step) {
    auto w = e.next();
    if (!w) break;
    return nu_encode(*w);
  }
  return std::nullopt;
}

/// The index-th basic open inside g in dyadic refinement order: level 0 is g
/// itself; level s holds the (2^(s+1)-1)^dim cubes of radius r/2^s centered
/// at c - r + j r/2^s, j = 1..2^(s+1)-1, in lexicographic order of j.
/// Each level covers g.
inline BasicOpen sub_ball(const BasicOpen& g, std::size_t index) {
  std::size_t level = 0;
  std::size_t per_axis = 1;
  auto level_size = [&](std::size_t axis) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < g.dim(); ++i) n *= axis;
    return n;
  };
  while (index >= level_size(per_axis)) {
    index -= level_size(per_axis);
    ++level;
    per_axis = (std::size_t{1} << (level + 1)) - 1;
  }
  if (level == 0) return g;
  Rational rho = g.radius * inverse_power(Integer(2), level);
  Point c(g.dim());
  for (std::size_t i = g.dim(); i-- > 0;) {
    std::size_t j = index % per_axis + 1;
    index /= per_axis;
    c[i] = g.center[i] - g.radius + rho * Rational(static_cast<long>(j));
  }
  return topology_detail::box_from(g.kind, std::move(c), rho);
}

/// The first strict sub-ball of g in dyadic order (its lower-left half-size cube).
inline BasicOpen canonical_refinement(const BasicOpen& g) { return sub_ball(g, 1); }

/// A basic open with the same center and half the radius; its closure lies
/// strictly inside g.
inline BasicOpen closed_half_ball(const BasicOpen& g) {
  return topology_detail::box_from(g.kind, g.center, g.radius * half());
}

}  // namespace bmg

#endif  // BMG_TOPOLOGY_HPP
