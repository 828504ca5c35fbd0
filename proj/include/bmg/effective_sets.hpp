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


// Effective nowhere dense sets and effective first category presentations.
//
// An EndWitness for a set A maps every basic open U to a basic open
// V ⊆ U with V ∩ A = ∅. The membership oracles are exact at rational points
// and exist for testing; nothing in the witness calculus depends on them.

#ifndef BMG_EFFECTIVE_SETS_HPP
#define BMG_EFFECTIVE_SETS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/ce_open.hpp"
#include "bmg/codes.hpp"
#include "bmg/error.hpp"
#include "bmg/rational.hpp"
#include "bmg/topology.hpp"

namespace bmg {

/// Result of one refinement. `note` is a short key=value annotation
/// (for example the covering ball a dense-open witness used).
struct Refinement {
  BasicOpen ball;
  std::string note;
};

struct EndWitness {
  std::string tag;
  std::function<Refinement(const BasicOpen&)> refine_fn;
  std::function<bool(const Point&)> contains;          // x ∈ A
  std::function<bool(const Point&)> closure_contains;  // x ∈ closure(A)

  Refinement refine(const BasicOpen& u) const { return refine_fn(u); }

  /// The name-level map w ↦ f(w).
  Name refine_name(const Space& space, const Name& w) const {
    return nu_encode(refine_fn(nu_decode(space, w)).ball);
  }

  bool in_closure(const Point& x) const {
    if (closure_contains) return closure_contains(x);
    return contains && contains(x);
  }
};

namespace effective_detail {

inline void require_line(const BasicOpen& u, const char* what) {
  if (u.kind != SpaceKind::euclidean || u.dim() != 1)
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + " lives on the real line");
}

inline Rational lower(const BasicOpen& u) { return u.center[0] - u.radius; }
inline Rational upper(const BasicOpen& u) { return u.center[0] + u.radius; }

}  // namespace effective_detail

/// Witness for the empty set: the identity refinement.
inline EndWitness empty_witness() {
  return EndWitness{"empty", [](const BasicOpen& u) { return Refinement{u, ""}; },
                    [](const Point&) { return false; }, nullptr};
}

/// Witness for the lattice Z + shift on the real line (shift 0 covers the
/// naturals). The refinement is the gap between the left end and the first
/// lattice point above it.
inline EndWitness lattice_witness(Rational shift = Rational(0)) {
  auto on_lattice = [shift](const Point& x) { return (x.at(0) - shift).is_integer(); };
  return EndWitness{"lattice(" + shift.str() + ")",
                    [shift](const BasicOpen& u) {
                      effective_detail::require_line(u, "lattice witness");
                      Rational a = effective_detail::lower(u);
                      Rational m = Rational((a - shift).floor() + 1) + shift;
                      Rational hi = min(effective_detail::upper(u), m);
                      return Refinement{interval(a, hi), "gap-below=" + m.str()};
                    },
                    on_lattice, nullptr};
}

/// Witness for a single point x. Keeps u when x ∉ u; otherwise the largest
/// cube on the wider side of x along the first coordinate.
inline EndWitness singleton_witness(Point x) {
  std::string tag = "singleton(" + join(x) + ")";
  auto is_x = [x](const Point& y) { return y == x; };
  return EndWitness{std::move(tag),
                    [x](const BasicOpen& u) {
                      if (!contains(u, x)) return Refinement{u, ""};
                      Rational off = coordinate_offset(u.kind, u.center[0], x[0]);
                      Rational left = u.radius + off;   // room below x
                      Rational right = u.radius - off;  // room above x
                      Point c = u.center;
                      Rational r;
                      if (left >= right) {
                        r = left * half();
                        c[0] = u.center[0] - u.radius + r;
                      } else {
                        r = right * half();
                        c[0] = u.center[0] + u.radius - r;
                      }
                      return Refinement{topology_detail::box_from(u.kind, std::move(c), r),
                                        "excludes=" + join(x)};
                    },
                    is_x, nullptr};
}

/// Exact membership of a rational in the middle-thirds Cantor set.
inline bool in_cantor_set(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1)) return false;
  if (x == Rational(1)) return true;
  std::set<std::pair<std::string, std::string>> seen;
  Rational y = x;
  for (;;) {
    if (y.sign() == 0) return true;
    if (!seen.insert({y.num().get_str(), y.den().get_str()}).second) return true;  // periodic, no digit 1
    Rational t = y * Rational(3);
    Integer digit = t.floor();
    Rational rest = t - Rational(digit);
    if (digit == 1) return rest.sign() == 0;  // 0.d..1 = 0.d..0222...
    if (digit == 3) return true;              // y == 1
    y = rest;
  }
}

/// Witness for the Cantor set: an open triadic interval inside u, or its
/// middle third if it survives the construction.
inline EndWitness cantor_witness() {
  auto member = [](const Point& x) { return in_cantor_set(x.at(0)); };
  return EndWitness{"cantor",
                    [](const BasicOpen& u) {
                      effective_detail::require_line(u, "cantor witness");
                      Rational a = effective_detail::lower(u), b = effective_detail::upper(u);
                      if (b <= Rational(0) || a >= Rational(1)) return Refinement{u, ""};
                      if (a < Rational(0)) return Refinement{interval(a, min(b, Rational(0))), ""};
                      if (b > Rational(1)) return Refinement{interval(max(a, Rational(1)), b), ""};
                      // Smallest t with 3 * 3^-t <= b - a.
                      unsigned long t = 0;
                      Integer scale = 1;
                      while (Rational(3) / Rational(scale) > b - a) {
                        ++t;
                        scale *= 3;
                      }
                      Integer k = (a * Rational(scale)).floor() + 1;
                      Rational lo(k, scale), hi(k + 1, scale);
                      bool survives = true;
                      Integer digits = k;
                      for (unsigned long i = 0; i < t; ++i) {
                        Integer d = digits % 3;
                        if (d == 1) survives = false;
                        digits /= 3;
                      }
                      if (survives) {
                        Rational third = (hi - lo) / Rational(3);
                        return Refinement{interval(lo + third, hi - third), "gap-level=" + std::to_string(t + 1)};
                      }
                      return Refinement{interval(lo, hi), "gap-level=" + std::to_string(t)};
                    },
                    member, member};
}

/// Witness for {1/n : n >= 1}; its refinements also avoid the limit point 0.
inline EndWitness inverse_powers_witness() {
  auto member = [](const Point& x) {
    const Rational& y = x.at(0);
    return y.sign() > 0 && y.num() == 1;
  };
  auto closure = [member](const Point& x) { return x.at(0).sign() == 0 || member(x); };
  return EndWitness{"inverse-powers",
                    [](const BasicOpen& u) {
                      effective_detail::require_line(u, "inverse-powers witness");
                      Rational a = effective_detail::lower(u), b = effective_detail::upper(u);
                      if (b <= Rational(0) || a >= Rational(1)) return Refinement{u, ""};
                      if (a < Rational(0)) return Refinement{interval(a, min(b, Rational(0))), ""};
                      if (b > Rational(1)) return Refinement{interval(max(a, Rational(1)), b), ""};
                      Integer n0 = (Rational(1) / b).floor() + 1;
                      Rational lo = max(a, Rational(Integer(1), n0));
                      return Refinement{interval(lo, b), "above=1/" + n0.get_str()};
                    },
                    member, closure};
}

/// Refinement into a dense c.e. open set A gives a witness for the
/// complement of A: V is the first ball of u ∩ e, where e is the emission of
/// A that the density evidence found meeting u.
inline EndWitness end_from_dense_ce_open(const CeOpenSet& a) {
  if (!a.density())
    throw Error(ErrorCode::density_search_diverged, "set '" + a.descriptor() + "' carries no density evidence");
  DensityEvidence evidence = *a.density();
  std::function<bool(const Point&)> member;
  if (a.membership()) {
    auto in_a = a.membership();
    member = [in_a](const Point& x) { return !in_a(x); };
  }
  return EndWitness{"complement(" + a.descriptor() + ")",
                    [evidence, desc = a.descriptor()](const BasicOpen& u) {
                      auto e = evidence.find_meeting(u);
                      if (!e)
                        throw Error(ErrorCode::density_search_diverged,
                                    "no emission of '" + desc + "' meets the ball within fuel " +
                                        std::to_string(evidence.fuel));
                      IntersectionEnumerator it(u, *e);
                      auto v = it.next();
                      if (!v) throw Error(ErrorCode::density_search_diverged, "density evidence returned a disjoint ball");
                      return Refinement{*std::move(v), "cover=" + join(e->center) + "~" + e->radius.str()};
                    },
                    member, nullptr};
}

/// The c.e. open set { refine(ν(u)) : u in length-lexicographic order },
/// dense and disjoint from the witnessed set. Names outside dom(ν) (or outside
/// the region) produce Skip tokens.
inline CeOpenSet dense_open_from_end(const Space& space, const EndWitness& w) {
  CeOpenSet out(space, "dense(" + w.tag + ")", [space, w]() -> Stream {
    struct Cursor {
      std::size_t length = 0;
      Integer index = 0;
    };
    auto cur = std::make_shared<Cursor>();
    return [space, w, cur]() -> Token {
      std::string bits = cur->length == 0 ? std::string() : cur->index.get_str(2);
      if (bits.size() < cur->length) bits.insert(0, cur->length - bits.size(), '0');
      cur->index += 1;
      Integer limit;
      mpz_ui_pow_ui(limit.get_mpz_t(), 2, cur->length);
      if (cur->index >= limit) {
        ++cur->length;
        cur->index = 0;
      }
      auto b = try_nu_decode(space, Name(bits));
      if (!b || !region_contains(space, *b)) return Token::skip();
      return Token::emit(w.refine(*b).ball);
    };
  });
  out.set_density(DensityEvidence{1, [w](const BasicOpen& u) -> std::optional<BasicOpen> {
                                    return w.refine(u).ball;
                                  }});
  return out;
}

/// Witness for the intersection of the witnessed sets: the refinements are
/// composed in list order, so the output in fact avoids every set.
inline EndWitness end_intersection(std::vector<EndWitness> ws) {
  if (ws.empty()) throw Error(ErrorCode::invalid_config, "end_intersection of an empty list");
  std::string tag = "meet(";
  for (std::size_t i = 0; i < ws.size(); ++i) tag += (i ? "," : "") + ws[i].tag;
  tag += ")";
  auto shared = std::make_shared<const std::vector<EndWitness>>(std::move(ws));
  std::function<bool(const Point&)> member;
  if (std::all_of(shared->begin(), shared->end(), [](const EndWitness& e) { return bool(e.contains); })) {
    member = [shared](const Point& x) {
      return std::all_of(shared->begin(), shared->end(), [&](const EndWitness& e) { return e.contains(x); });
    };
  }
  return EndWitness{std::move(tag),
                    [shared](const BasicOpen& u) {
                      Refinement r{u, ""};
                      for (const auto& e : *shared) r = e.refine(r.ball);
                      return r;
                    },
                    member, nullptr};
}

/// The same refinement re-tagged for the closure of the set.
inline EndWitness end_closure(const EndWitness& w) {
  EndWitness out = w;
  out.tag = "closure(" + w.tag + ")";
  if (w.closure_contains) out.contains = w.closure_contains;
  return out;
}

/// A c.e. sequence of witnesses, layers numbered from 1. Past `size` (when
/// finite) every layer is the empty-set witness.
struct MeagerPresentation {
  std::string id;
  std::function<EndWitness(std::size_t)> layer_fn;
  std::optional<std::size_t> size;

  EndWitness layer(std::size_t k) const {
    if (k == 0) throw Error(ErrorCode::invalid_config, "layers are numbered from 1");
    if (size && k > *size) return empty_witness();
    return layer_fn(k);
  }
};

inline MeagerPresentation single_layer(EndWitness w) {
  std::string id = w.tag;
  return MeagerPresentation{std::move(id), [w](std::size_t) { return w; }, 1};
}

/// Round-robin interleaving of finitely many presentations.
inline MeagerPresentation meager_union(std::vector<MeagerPresentation> ps) {
  if (ps.empty()) return MeagerPresentation{"empty", [](std::size_t) { return empty_witness(); }, 0};
  if (ps.size() == 1) return ps.front();
  std::string id = "union(";
  for (std::size_t i = 0; i < ps.size(); ++i) id += (i ? "," : "") + ps[i].id;
  id += ")";
  bool all_finite = std::all_of(ps.begin(), ps.end(), [](const MeagerPresentation& p) { return p.size.has_value(); });
  std::optional<std::size_t> size;
  if (all_finite) {
    std::size_t longest = 0;
    for (const auto& p : ps) longest = std::max(longest, *p.size);
    size = longest * ps.size();
  }
  auto shared = std::make_shared<const std::vector<MeagerPresentation>>(std::move(ps));
  return MeagerPresentation{std::move(id),
                            [shared](std::size_t k) {
                              std::size_t m = shared->size();
                              return (*shared)[(k - 1) % m].layer((k - 1) / m + 1);
                            },
                            size};
}

/// Cantor-diagonal interleaving of an infinite sequence of presentations:
/// layer k is layer j+1 of presentation i+1 where (i, j) is the (k-1)-th pair
/// in diagonal order.
inline MeagerPresentation meager_union(std::function<MeagerPresentation(std::size_t)> seq, std::string id) {
  return MeagerPresentation{std::move(id),
                            [seq](std::size_t k) {
                              std::size_t n = k - 1, w = 0;
                              while ((w + 1) * (w + 2) / 2 <= n) ++w;
                              std::size_t j = n - w * (w + 1) / 2;
                              std::size_t i = w - j;
                              return seq(i + 1).layer(j + 1);
                            },
                            std::nullopt};
}

/// The first `count` reduced rationals in (lo, hi), ordered by denominator
/// and then numerator.
inline std::vector<Rational> first_rationals(const Rational& lo, const Rational& hi, std::size_t count) {
  if (!(lo < hi)) throw Error(ErrorCode::invalid_config, "empty rational range");
  std::vector<Rational> out;
  for (Integer q = 1; out.size() < count; ++q) {
    Integer p = (lo * Rational(q)).floor() + 1;
    for (; Rational(p, q) < hi && out.size() < count; ++p) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

/// The k-th (1-based) rational of Q ∩ (lo, hi) in canonical order.
inline Rational nth_rational(const Rational& lo, const Rational& hi, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::invalid_config, "rationals are numbered from 1");
  return first_rationals(lo, hi, k).back();
}

/// Q ∩ (lo, hi) as singleton layers in canonical rational order.
inline MeagerPresentation rationals_presentation(const Rational& lo, const Rational& hi) {
  return MeagerPresentation{"rationals(" + lo.str() + "," + hi.str() + ")",
                            [lo, hi](std::size_t k) { return singleton_witness({nth_rational(lo, hi, k)}); },
                            std::nullopt};
}

}  // namespace bmg

#endif  // BMG_EFFECTIVE_SETS_HPP
