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


// Named game configurations and the human-vs-machine session used by both
// the terminal loop and the HTTP service.

#ifndef BMG_PLAY_HPP
#define BMG_PLAY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmg/ce_open.hpp"
#include "bmg/dynamics.hpp"
#include "bmg/formats.hpp"
#include "bmg/game.hpp"
#include "bmg/liouville.hpp"

namespace bmg {

struct PresetInfo {
  std::string name;
  std::string description;
};

inline const std::vector<PresetInfo>& presets() {
  static const std::vector<PresetInfo> list{
      {"liouville", "real line, region (0,1); P2 forces a Liouville number and records (p,q) witnesses"},
      {"rationals", "real line, region (0,1); P2 avoids the k-th rational of (0,1) at round k"},
      {"recurrence", "torus system (default rotation by 1/3, E = arc(1/8,1/8)); P2 stays among returning points"},
      {"custom", "real line, region (0,1); P2 avoids the layers of a presentation file"},
  };
  return list;
}

struct PlayConfig {
  std::string preset = "liouville";
  Player human = Player::p1;
  std::size_t rounds = 10;
  std::size_t fuel = 10000;
  std::string system_text;        // recurrence
  std::string open_set_text;      // recurrence
  std::string presentation_text;  // custom
};

inline const char* default_system_text() { return "kind=rotation dim=1 rho=1/3\n"; }
inline const char* default_open_set_text() { return "1/8 1/8\n"; }

struct Setup {
  std::string preset;
  Space space;
  Strategy machine;
  std::string presentation = "-";
};

inline Setup make_setup(const PlayConfig& cfg) {
  if (cfg.rounds == 0) throw Error(ErrorCode::invalid_config, "rounds must be at least 1");
  if (cfg.fuel == 0) throw Error(ErrorCode::invalid_config, "fuel must be at least 1");
  Space line = Space::line(0, 1);
  auto machine_p1 = [](std::optional<BasicOpen> first = std::nullopt) { return canonical_p1(std::move(first)); };
  if (cfg.preset == "liouville") {
    return Setup{cfg.preset, line, cfg.human == Player::p1 ? liouville_p2_strategy() : machine_p1(),
                 "liouville-complement"};
  }
  if (cfg.preset == "rationals") {
    auto pres = rationals_presentation(Rational(0), Rational(1));
    return Setup{cfg.preset, line, cfg.human == Player::p1 ? p2_meager_strategy(pres) : machine_p1(), pres.id};
  }
  if (cfg.preset == "custom") {
    if (cfg.presentation_text.empty()) throw Error(ErrorCode::invalid_config, "custom preset needs a presentation");
    auto pres = parse_presentation(cfg.presentation_text, line);
    return Setup{cfg.preset, line, cfg.human == Player::p1 ? p2_meager_strategy(pres) : machine_p1(), pres.id};
  }
  if (cfg.preset == "recurrence") {
    Homeomorphism t = parse_system(cfg.system_text.empty() ? default_system_text() : cfg.system_text);
    auto balls = parse_open_set(cfg.open_set_text.empty() ? default_open_set_text() : cfg.open_set_text, t.space);
    BasicOpen first = balls.front();
    CeOpenSet e = CeOpenSet::of(t.space, std::move(balls), "E");
    Strategy machine =
        cfg.human == Player::p1 ? recurrence_p2_strategy(t, e, cfg.fuel) : machine_p1(std::move(first));
    return Setup{cfg.preset, t.space, std::move(machine), "-"};
  }
  throw Error(ErrorCode::unknown_preset, "unknown preset '" + cfg.preset + "'");
}

/// A game between a human and the preset's machine strategy. A human move
/// and the machine's reply are committed together: if either is rejected,
/// the session is left untouched.
class PlaySession {
 public:
  explicit PlaySession(PlayConfig cfg)
      : cfg_(std::move(cfg)), setup_(make_setup(cfg_)), game_(setup_.space, cfg_.rounds) {
    if (cfg_.human == Player::p2) machine_move(game_);
  }

  const PlayConfig& config() const { return cfg_; }
  const Setup& setup() const { return setup_; }
  const GameSession& game() const { return game_; }

  /// Plays the human move g and the machine reply; returns the new moves.
  std::vector<Move> submit(const BasicOpen& g) {
    GameSession next = game_;
    next.play(cfg_.human, g);
    if (!next.finished()) machine_move(next);
    std::vector<Move> added(next.moves().begin() + static_cast<std::ptrdiff_t>(game_.moves().size()),
                            next.moves().end());
    game_ = std::move(next);
    return added;
  }

  Transcript transcript() const {
    std::string human = "human";
    return cfg_.human == Player::p1 ? transcript_of(game_, human, setup_.machine.descriptor, setup_.presentation)
                                    : transcript_of(game_, setup_.machine.descriptor, human, setup_.presentation);
  }

  bool has_certificate() const { return setup_.preset == "liouville" && cfg_.human == Player::p1; }

  Certificate certificate() const { return certificate_from(game_.moves()); }

 private:
  void machine_move(GameSession& s) const {
    Response r = setup_.machine.respond(s.space(), s.moves());
    try {
      s.play(setup_.machine.role, std::move(r.ball), std::move(r.note));
    } catch (const Error& e) {
      throw Error(ErrorCode::strategy_violation, setup_.machine.descriptor + ": " + e.what(), s.round(), e.code());
    }
  }

  PlayConfig cfg_;
  Setup setup_;
  GameSession game_;
};

}  // namespace bmg

#endif  // BMG_PLAY_HPP
