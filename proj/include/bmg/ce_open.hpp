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

#ifndef BMG_CE_OPEN_HPP
#define BMG_CE_OPEN_HPP

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/codes.hpp"
#include "bmg/topology.hpp"

namespace bmg {

/// One step of a c.e. enumeration. Skip lets a producer spend a step without
/// emitting, which is what makes dovetailed searches interleavable.
struct Token {
  enum class Kind { emit, skip, done };
  Kind kind = Kind::done;
  std::optional<BasicOpen> ball;

  static Token emit(BasicOpen b) { return Token{Kind::emit, std::move(b)}; }
  static Token skip() { return Token{Kind::skip, std::nullopt}; }
  static Token done() { return Token{Kind::done, std::nullopt}; }
};

using Stream = std::function<Token()>;

/// Companion to a claim that a c.e. open set is dense: a search that, given a
/// basic open U, finds an emitted ball meeting U within its declared fuel.
struct DensityEvidence {
  std::size_t fuel = 0;
  std::function<std::optional<BasicOpen>(const BasicOpen&)> find_meeting;
};

/// A c.e. open set presented by a deterministic, restartable token stream.
/// Every call to stream() starts the enumeration from the beginning.
class CeOpenSet {
 public:
  CeOpenSet(Space space, std::string descriptor, std::function<Stream()> start)
      : space_(std::move(space)), descriptor_(std::move(descriptor)), start_(std::move(start)) {}

  /// The finite union of `balls`.
  static CeOpenSet of(Space space, std::vector<BasicOpen> balls, std::string descriptor) {
    auto shared = std::make_shared<const std::vector<BasicOpen>>(std::move(balls));
    return CeOpenSet(std::move(space), std::move(descriptor), [shared]() -> Stream {
      return [shared, i = std::size_t{0}]() mutable {
        if (i >= shared->size()) return Token::done();
        return Token::emit((*shared)[i++]);
      };
    });
  }

  Stream stream() const { return start_(); }
  const Space& space() const { return space_; }
  const std::string& descriptor() const { return descriptor_; }

  const std::optional<DensityEvidence>& density() const { return density_; }
  CeOpenSet& set_density(DensityEvidence evidence) {
    density_ = std::move(evidence);
    return *this;
  }

  /// Optional exact membership test at rational points.
  const std::function<bool(const Point&)>& membership() const { return membership_; }
  CeOpenSet& set_membership(std::function<bool(const Point&)> test) {
    membership_ = std::move(test);
    return *this;
  }

  /// Balls emitted within the first `fuel` tokens.
  std::vector<BasicOpen> emissions(std::size_t fuel) const {
    std::vector<BasicOpen> out;
    Stream s = stream();
    for (std::size_t i = 0; i < fuel; ++i) {
      Token t = s();
      if (t.kind == Token::Kind::done) break;
      if (t.kind == Token::Kind::emit) out.push_back(*std::move(t.ball));
    }
    return out;
  }

  /// All emissions if the stream finishes within `fuel` tokens.
  std::optional<std::vector<BasicOpen>> finite_emissions(std::size_t fuel) const {
    std::vector<BasicOpen> out;
    Stream s = stream();
    for (std::size_t i = 0; i < fuel; ++i) {
      Token t = s();
      if (t.kind == Token::Kind::done) return out;
      if (t.kind == Token::Kind::emit) out.push_back(*std::move(t.ball));
    }
    return std::nullopt;
  }

 private:
  Space space_;
  std::string descriptor_;
  std::function<Stream()> start_;
  std::optional<DensityEvidence> density_;
  std::function<bool(const Point&)> membership_;
};

inline CeOpenSet map_emissions(const CeOpenSet& u, std::function<BasicOpen(const BasicOpen&)> f,
                               std::string descriptor) {
  return CeOpenSet(u.space(), std::move(descriptor), [u, f]() -> Stream {
    return [s = u.stream(), f]() mutable {
      Token t = s();
      if (t.kind == Token::Kind::emit) return Token::emit(f(*t.ball));
      return t;
    };
  });
}

/// Dovetails the emissions of a and b with the intersection enumerations of
/// every meeting pair; the union of the output is a ∩ b.
inline CeOpenSet intersect_ce(const CeOpenSet& a, const CeOpenSet& b) {
  struct State {
    Stream sa, sb;
    bool a_done = false, b_done = false;
    std::vector<BasicOpen> as, bs;
    std::vector<IntersectionEnumerator> active;
    std::deque<BasicOpen> ready;
  };
  return CeOpenSet(a.space(), "(" + a.descriptor() + ")&(" + b.descriptor() + ")", [a, b]() -> Stream {
    auto st = std::make_shared<State>();
    st->sa = a.stream();
    st->sb = b.stream();
    return [st]() -> Token {
      if (!st->ready.empty()) {
        BasicOpen out = std::move(st->ready.front());
        st->ready.pop_front();
        return Token::emit(std::move(out));
      }
      if (!st->a_done) {
        Token t = st->sa();
        if (t.kind == Token::Kind::done) st->a_done = true;
        if (t.kind == Token::Kind::emit) {
          for (const auto& other : st->bs) {
            if (intersects(*t.ball, other)) st->active.emplace_back(*t.ball, other);
          }
          st->as.push_back(*std::move(t.ball));
        }
      }
      if (!st->b_done) {
        Token t = st->sb();
        if (t.kind == Token::Kind::done) st->b_done = true;
        if (t.kind == Token::Kind::emit) {
          for (const auto& other : st->as) {
            if (intersects(other, *t.ball)) st->active.emplace_back(other, *t.ball);
          }
          st->bs.push_back(*std::move(t.ball));
        }
      }
      std::vector<IntersectionEnumerator> still;
      for (auto& e : st->active) {
        if (auto w = e.next()) {
          st->ready.push_back(*std::move(w));
          still.push_back(std::move(e));
        }
      }
      st->active = std::move(still);
      if (!st->ready.empty()) {
        BasicOpen out = std::move(st->ready.front());
        st->ready.pop_front();
        return Token::emit(std::move(out));
      }
      if (st->a_done && st->b_done && st->active.empty()) return Token::done();
      return Token::skip();
    };
  });
}

/// Yes (with the containing ball's name) iff some ball emitted within `fuel`
/// tokens contains x; nothing means Unknown.
inline std::optional<Name> member_semidecide(const Point& x, const CeOpenSet& u, std::size_t fuel) {
  Stream s = u.stream();
  for (std::size_t i = 0; i < fuel; ++i) {
    Token t = s();
    if (t.kind == Token::Kind::done) break;
    if (t.kind == Token::Kind::emit && contains(*t.ball, x)) return nu_encode(*t.ball);
  }
  return std::nullopt;
}

inline std::optional<BasicOpen> first_emission(const CeOpenSet& u, std::size_t fuel) {
  Stream s = u.stream();
  for (std::size_t i = 0; i < fuel; ++i) {
    Token t = s();
    if (t.kind == Token::Kind::done) break;
    if (t.kind == Token::Kind::emit) return t.ball;
  }
  return std::nullopt;
}

/// Density evidence by brute search of the set's own stream.
inline DensityEvidence dovetail_evidence(const CeOpenSet& u, std::size_t fuel) {
  return DensityEvidence{fuel, [u, fuel](const BasicOpen& target) -> std::optional<BasicOpen> {
                           Stream s = u.stream();
                           for (std::size_t i = 0; i < fuel; ++i) {
                             Token t = s();
                             if (t.kind == Token::Kind::done) break;
                             if (t.kind == Token::Kind::emit && intersects(*t.ball, target)) return t.ball;
                           }
                           return std::nullopt;
                         }};
}

/// A basic open V with closure(V) strictly inside the (non-empty) set u: the
/// first emitted ball at half radius.
inline std::optional<BasicOpen> closed_sub_ball(const CeOpenSet& u, std::size_t fuel) {
  auto b = first_emission(u, fuel);
  if (!b) return std::nullopt;
  return closed_half_ball(*b);
}

}  // namespace bmg

#endif  // BMG_CE_OPEN_HPP
