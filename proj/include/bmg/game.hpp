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


#ifndef BMG_GAME_HPP
#define BMG_GAME_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/effective_sets.hpp"
#include "bmg/error.hpp"
#include "bmg/rational.hpp"
#include "bmg/topology.hpp"

namespace bmg {

enum class Player { p1, p2 };

inline std::string to_string(Player p) { return p == Player::p1 ? "P1" : "P2"; }

inline Player parse_player(std::string_view s) {
  if (s == "P1" || s == "p1") return Player::p1;
  if (s == "P2" || s == "p2") return Player::p2;
  throw Error(ErrorCode::parse_error, "unknown player '" + std::string(s) + "'");
}

/// Ordered key=value pairs, rendered "k=v;k=v" ("-" when empty).
class Annotation {
 public:
  Annotation() = default;

  Annotation& add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  std::optional<std::string> get(std::string_view key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string str() const {
    if (entries_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ';';
      out += entries_[i].first + "=" + entries_[i].second;
    }
    return out;
  }

  static Annotation parse(std::string_view text) {
    Annotation a;
    if (text == "-" || text.empty()) return a;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(start, end - start);
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos)
        throw Error(ErrorCode::parse_error, "annotation item without '=': " + std::string(item));
      a.add(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
      start = end + 1;
    }
    return a;
  }

  /// Appends every entry of `other`. Notes of the form "k=v;k=v" are split.
  Annotation& merge_note(std::string_view note) {
    if (note.empty()) return *this;
    for (auto& e : parse(note).entries_) entries_.push_back(std::move(e));
    return *this;
  }

  friend bool operator==(const Annotation&, const Annotation&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct Move {
  Player player = Player::p1;
  BasicOpen ball;
  Annotation note;

  friend bool operator==(const Move&, const Move&) = default;
};

/// A Banach-Mazur play: P1 moves first, moves alternate, and each move is a
/// basic open inside the previous one (the first inside the region).
class GameSession {
 public:
  explicit GameSession(Space space, std::optional<std::size_t> round_limit = std::nullopt)
      : space_(std::move(space)), round_limit_(round_limit) {}

  const Space& space() const { return space_; }
  const std::vector<Move>& moves() const { return moves_; }
  std::optional<std::size_t> round_limit() const { return round_limit_; }

  Player to_move() const { return moves_.size() % 2 == 0 ? Player::p1 : Player::p2; }

  /// The round the next move belongs to (1-based).
  std::size_t round() const { return moves_.size() / 2 + 1; }

  bool finished() const { return round_limit_ && moves_.size() >= 2 * *round_limit_; }

  const BasicOpen* last() const { return moves_.empty() ? nullptr : &moves_.back().ball; }

  void validate(Player who, const BasicOpen& g) const {
    if (finished()) throw Error(ErrorCode::session_finished, "round limit reached", round());
    if (who != to_move()) throw Error(ErrorCode::wrong_turn, "it is " + to_string(to_move()) + "'s turn", round());
    if (g.kind != space_.kind || g.dim() != space_.dim)
      throw Error(ErrorCode::invalid_move, "move lives in a different space", round());
    if (auto v = basis_violation(g))
      throw Error(ErrorCode::invalid_move, "not a basic open set: " + std::string(bmg::to_string(*v)), round());
    if (moves_.empty()) {
      if (!region_contains(space_, g)) throw Error(ErrorCode::outside_region, "first move leaves the region", round());
    } else if (!subset(g, moves_.back().ball)) {
      throw Error(ErrorCode::not_nested, "move is not inside the previous move", round());
    }
  }

  void play(Player who, BasicOpen g, Annotation note = {}) {
    validate(who, g);
    moves_.push_back(Move{who, std::move(g), std::move(note)});
  }

 private:
  Space space_;
  std::optional<std::size_t> round_limit_;
  std::vector<Move> moves_;
};

struct Response {
  BasicOpen ball;
  Annotation note;
};

/// A deterministic strategy: history (all moves so far) to the next move.
struct Strategy {
  Player role = Player::p2;
  std::string descriptor;
  std::function<Response(const Space&, std::span<const Move>)> respond;
};

/// An outside player (human, test script). Returning nothing ends the run.
struct External {
  std::string descriptor = "external";
  std::function<std::optional<BasicOpen>(const GameSession&)> next;
};

using Participant = std::variant<Strategy, External>;

inline std::string descriptor_of(const Participant& p) {
  return std::visit([](const auto& x) { return x.descriptor; }, p);
}

struct Transcript {
  Space space;
  std::string p1;
  std::string p2;
  std::string presentation = "-";
  std::vector<Move> moves;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

inline Transcript transcript_of(const GameSession& s, std::string p1, std::string p2,
                                std::string presentation = "-") {
  return Transcript{s.space(), std::move(p1), std::move(p2), std::move(presentation), s.moves()};
}

struct ReplayVerdict {
  bool ok = true;
  std::size_t round = 0;  // first failing round when !ok
  std::optional<ErrorCode> code;
  std::string message;
};

/// Re-validates every move of a transcript from scratch.
inline ReplayVerdict replay(const Transcript& t) {
  GameSession s(t.space);
  for (const auto& m : t.moves) {
    try {
      s.play(m.player, m.ball, m.note);
    } catch (const Error& e) {
      return ReplayVerdict{false, s.round(), e.code(), e.what()};
    }
  }
  return {};
}

/// Plays `rounds` full rounds (or until an external player stops).
inline void run(GameSession& s, const Participant& p1, const Participant& p2, std::size_t rounds) {
  std::size_t target = s.moves().size() + 2 * rounds;
  while (s.moves().size() < target && !s.finished()) {
    Player who = s.to_move();
    const Participant& actor = who == Player::p1 ? p1 : p2;
    if (const auto* strategy = std::get_if<Strategy>(&actor)) {
      Response r = strategy->respond(s.space(), s.moves());
      try {
        s.play(who, std::move(r.ball), std::move(r.note));
      } catch (const Error& e) {
        throw Error(ErrorCode::strategy_violation, strategy->descriptor + ": " + e.what(), s.round(), e.code());
      }
    } else {
      const auto& ext = std::get<External>(actor);
      auto g = ext.next(s);
      if (!g) return;
      try {
        s.play(who, std::move(*g));
      } catch (const Error& e) {
        throw Error(ErrorCode::invalid_external_move, e.what(), s.round(), e.code());
      }
    }
  }
}

inline Transcript run(const Space& space, const Participant& p1, const Participant& p2, std::size_t rounds,
                      std::string presentation = "-") {
  GameSession s(space);
  run(s, p1, p2, rounds);
  return transcript_of(s, descriptor_of(p1), descriptor_of(p2), std::move(presentation));
}

/// A ball covering the whole space, used as the default first move when the
/// region is unrestricted.
inline BasicOpen default_first_move(const Space& space) {
  if (!space.whole()) return space.region.front();
  if (space.kind == SpaceKind::torus) return arc(Point(space.dim, half()), Rational(Integer(1), Integer(4)));
  return ball(Point(space.dim, Rational(0)), Rational(1));
}

/// P1: opens with `first` (default: the region's first ball), then always
/// plays the canonical refinement of the previous move.
inline Strategy canonical_p1(std::optional<BasicOpen> first = std::nullopt) {
  return Strategy{Player::p1, "canonical-p1", [first](const Space& space, std::span<const Move> h) {
                    if (h.empty()) return Response{first ? *first : default_first_move(space), {}};
                    return Response{canonical_refinement(h.back().ball), {}};
                  }};
}

/// P2: the canonical refinement of P1's last move.
inline Strategy canonical_p2() {
  return Strategy{Player::p2, "canonical-p2", [](const Space&, std::span<const Move> h) {
                    return Response{canonical_refinement(h.back().ball), {}};
                  }};
}

/// P2 that answers with P1's own move.
inline Strategy echo_p2() {
  return Strategy{Player::p2, "echo-p2",
                  [](const Space&, std::span<const Move> h) { return Response{h.back().ball, {}}; }};
}

/// Round k: the closure witness of layer k applied to P1's last move.
inline Strategy p2_meager_strategy(const MeagerPresentation& pres) {
  return Strategy{Player::p2, "meager-p2(" + pres.id + ")", [pres](const Space&, std::span<const Move> h) {
                    std::size_t k = h.size() / 2 + 1;
                    Refinement r = end_closure(pres.layer(k)).refine(h.back().ball);
                    Annotation note;
                    note.add("layer", std::to_string(k)).merge_note(r.note);
                    return Response{std::move(r.ball), std::move(note)};
                  }};
}

/// P1 forcing a point of `nbhd` outside the presented set: opens with nbhd;
/// at round k >= 2 refines P2's last move away from layer k-1 and shrinks to
/// radius min(r/2, 1/(4k)), so diam < 1/k and the closure sits strictly
/// inside the previous move.
inline Strategy p1_point_meager_strategy(const BasicOpen& nbhd, const MeagerPresentation& local) {
  return Strategy{Player::p1, "point-meager-p1(" + local.id + ")",
                  [nbhd, local](const Space&, std::span<const Move> h) {
                    if (h.empty()) return Response{nbhd, {}};
                    std::size_t k = h.size() / 2 + 1;
                    Refinement b = end_closure(local.layer(k - 1)).refine(h.back().ball);
                    Rational cap(Integer(1), Integer(4 * k));
                    Rational r = min(b.ball.radius * half(), cap);
                    Annotation note;
                    note.add("layer", std::to_string(k - 1)).merge_note(b.note);
                    return Response{topology_detail::box_from(b.ball.kind, b.ball.center, r), std::move(note)};
                  }};
}

/// Center of the first move with diameter below eps.
inline Point limit_point(const GameSession& s, const Rational& eps) {
  for (const auto& m : s.moves()) {
    if (diameter(m.ball) < eps) return m.ball.center;
  }
  throw Error(ErrorCode::precision_unreached, "no move has diameter below " + eps.str());
}

}  // namespace bmg

#endif  // BMG_GAME_HPP
