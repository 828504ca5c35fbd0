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

#ifndef BMG_BASIC_OPEN_HPP
#define BMG_BASIC_OPEN_HPP

#include <string>
#include <utility>
#include <vector>

#include "bmg/error.hpp"
#include "bmg/rational.hpp"

namespace bmg {

enum class SpaceKind { euclidean, torus };

inline std::string to_string(SpaceKind kind) {
  return kind == SpaceKind::torus ? "torus" : "euclidean";
}

/// A basic open set: an open l-infinity box with rational center and a single
/// rational radius. In dimension 1 this is an open interval (or an open arc on
/// the circle R/Z). Torus centers are kept in [0,1) and radii below 1/2.
struct BasicOpen {
  SpaceKind kind = SpaceKind::euclidean;
  Point center;
  Rational radius;

  std::size_t dim() const { return center.size(); }

  friend bool operator==(const BasicOpen&, const BasicOpen&) = default;
};

inline const Rational& half() {
  static const Rational h(Integer(1), Integer(2));
  return h;
}

/// Reports why `b` is not a member of the basis, or nothing if it is.
inline std::optional<ErrorCode> basis_violation(const BasicOpen& b) {
  if (b.center.empty()) return ErrorCode::malformed_name;
  if (b.radius.sign() <= 0) return ErrorCode::non_positive_radius;
  if (b.kind == SpaceKind::torus) {
    if (b.radius >= half()) return ErrorCode::malformed_name;
    for (const auto& c : b.center) {
      if (c.sign() < 0 || c >= Rational(1)) return ErrorCode::malformed_name;
    }
  }
  return std::nullopt;
}

inline void require_basic(const BasicOpen& b) {
  if (auto v = basis_violation(b)) {
    throw Error(*v, "not a basic open set (radius " + b.radius.str() + ")");
  }
}

inline BasicOpen ball(Point center, Rational radius) {
  BasicOpen b{SpaceKind::euclidean, std::move(center), std::move(radius)};
  require_basic(b);
  return b;
}

inline BasicOpen ball(Rational center, Rational radius) {
  return ball(Point{std::move(center)}, std::move(radius));
}

/// The open interval (lo, hi).
inline BasicOpen interval(const Rational& lo, const Rational& hi) {
  return ball((lo + hi) * half(), (hi - lo) * half());
}

/// Torus box; the center is reduced mod 1.
inline BasicOpen arc(Point center, Rational radius) {
  for (auto& c : center) c = frac(c);
  BasicOpen b{SpaceKind::torus, std::move(center), std::move(radius)};
  require_basic(b);
  return b;
}

inline BasicOpen arc(Rational center, Rational radius) {
  return arc(Point{std::move(center)}, std::move(radius));
}

/// A concrete space: kind, dimension, and the region all plays must stay in.
/// An empty region list means the whole space.
struct Space {
  SpaceKind kind = SpaceKind::euclidean;
  std::size_t dim = 1;
  std::vector<BasicOpen> region;

  bool whole() const { return region.empty(); }

  static Space euclidean(std::size_t dim, std::vector<BasicOpen> region = {}) {
    return Space{SpaceKind::euclidean, dim, std::move(region)};
  }
  static Space torus(std::size_t dim, std::vector<BasicOpen> region = {}) {
    return Space{SpaceKind::torus, dim, std::move(region)};
  }
  /// The real line with region (lo, hi).
  static Space line(const Rational& lo, const Rational& hi) {
    return euclidean(1, {interval(lo, hi)});
  }

  friend bool operator==(const Space&, const Space&) = default;
};

inline void require_member(const Space& space, const BasicOpen& b) {
  if (b.kind != space.kind || b.dim() != space.dim)
    throw Error(ErrorCode::dimension_mismatch,
                "basic open of kind " + to_string(b.kind) + "/" + std::to_string(b.dim()) +
                    " in space " + to_string(space.kind) + "/" + std::to_string(space.dim));
  require_basic(b);
}

}  // namespace bmg

#endif  // BMG_BASIC_OPEN_HPP
