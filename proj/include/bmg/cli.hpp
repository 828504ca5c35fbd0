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


// bmgame command line. Exit codes: 0 success, 1 validation failure,
// 2 usage, parse or I/O error, 3 wandering set detected.

#ifndef BMG_CLI_HPP
#define BMG_CLI_HPP

#include <cstddef>
#include <iostream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "bmg/dynamics.hpp"
#include "bmg/formats.hpp"
#include "bmg/game.hpp"
#include "bmg/http_server.hpp"
#include "bmg/liouville.hpp"
#include "bmg/play.hpp"
#include "bmg/service.hpp"

namespace bmg {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_usage = 2, exit_wandering = 3 };

struct CliOptions {
  std::size_t rounds = 10;
  std::size_t fuel = 10000;
  std::string eps = "1/1048576";
  std::string preset = "liouville";
  std::string out;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string system;
  std::string open_set;
  std::string presentation;
  std::string human = "P1";
  std::size_t horizon = 8;
  std::vector<std::string> paths;
};

namespace cli_detail {

inline Rational parse_eps(const std::string& text) {
  Rational eps = Rational::parse(text);
  if (eps.sign() <= 0) throw Error(ErrorCode::invalid_config, "eps must be positive");
  return eps;
}

inline void write_outputs(const CliOptions& o, const Transcript& t, const Certificate* cert, std::ostream& out) {
  if (o.out.empty()) return;
  write_file(o.out, format_transcript(t));
  out << "transcript written to " << o.out << "\n";
  if (cert) {
    write_file(o.out + ".cert", format_certificate(*cert));
    out << "certificate written to " << o.out << ".cert\n";
  }
}

inline std::string interval_text(const BasicOpen& b) {
  if (b.dim() == 1 && b.kind == SpaceKind::euclidean)
    return "(" + (b.center[0] - b.radius).str() + ", " + (b.center[0] + b.radius).str() + ")";
  if (b.dim() == 1) return "arc(center " + b.center[0].str() + ", radius " + b.radius.str() + ")";
  return "box(center " + join(b.center) + ", radius " + b.radius.str() + ")";
}

inline int demo_liouville(const CliOptions& o, std::ostream& out, std::ostream& err) {
  Rational eps = parse_eps(o.eps);
  Space space = Space::line(0, 1);
  GameSession s(space);
  Strategy p1 = canonical_p1();
  Strategy p2 = liouville_p2_strategy();
  run(s, p1, p2, o.rounds);
  Transcript t = transcript_of(s, p1.descriptor, p2.descriptor, "liouville-complement");
  Certificate cert = certificate_from(s.moves());
  for (const auto& row : cert) {
    out << "round " << row.j << ": p=" << row.p.get_str() << " q=" << row.q.get_str() << " interval "
        << interval_text(ball(row.center, row.radius)) << "\n";
  }
  out << "final interval " << interval_text(s.moves().back().ball) << "\n";
  try {
    Point x = limit_point(s, eps);
    out << "limit point within " << eps.str() << ": " << join(x) << "\n";
  } catch (const Error&) {
    out << "limit point: precision " << eps.str() << " not reached\n";
  }
  write_outputs(o, t, &cert, out);
  CertificateVerdict v = check_certificate(cert);
  if (!v.ok) {
    err << "certificate FAILED at round " << v.failing_round << ": " << v.reason << "\n";
    return exit_invalid;
  }
  out << "certificate ok (" << cert.size() << " rounds)\n";
  return exit_ok;
}

inline int demo_recurrence(const CliOptions& o, std::ostream& out, std::ostream& err) {
  Homeomorphism t = parse_system(o.system.empty() ? std::string(default_system_text()) : read_file(o.system));
  auto balls = parse_open_set(o.open_set.empty() ? std::string(default_open_set_text()) : read_file(o.open_set), t.space);
  CeOpenSet e = CeOpenSet::of(t.space, balls, "E");
  WanderingResult w = wandering_probe(t, e, o.horizon, o.fuel);
  out << "wandering probe (horizon " << o.horizon << "): " << w.str() << "\n";
  out << "system " << t.descriptor << "\n";
  GameSession s(t.space);
  Strategy p1 = canonical_p1(balls.front());
  Strategy p2 = recurrence_p2_strategy(t, e, o.fuel);
  int status = exit_ok;
  try {
    run(s, p1, p2, o.rounds);
  } catch (const Error& ex) {
    if (ex.code() != ErrorCode::avoidance_search_exhausted) throw;
    err << ex.what() << " at round " << ex.round().value_or(0) << "\n";
    status = exit_wandering;
  }
  for (std::size_t i = 1; i < s.moves().size(); i += 2) {
    const Move& m = s.moves()[i];
    std::size_t round = i / 2 + 1;
    out << "round " << round << ": " << interval_text(m.ball) << " " << m.note.str();
    if (auto n = m.note.get("n")) {
      BasicOpen image = iterate_forward(t, m.ball, std::stoul(*n) + 1);
      bool in_e = false, image_in_e = false;
      for (const auto& b : balls) {
        in_e = in_e || subset(m.ball, b);
        image_in_e = image_in_e || subset(image, b);
      }
      bool ok = in_e && image_in_e && std::stoul(*n) >= round;
      out << (ok ? " returns-to-E" : " CHECK-FAILED");
      if (!ok && status == exit_ok) status = exit_invalid;
    }
    out << "\n";
  }
  write_outputs(o, transcript_of(s, p1.descriptor, p2.descriptor), nullptr, out);
  return status;
}

inline int verify_one(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text = read_file(path);
  if (formats_detail::content_lines(text).empty()) {
    err << "warning: " << path << " is empty; nothing to check\n";
    out << path << ": ok (vacuous)\n";
    return exit_ok;
  }
  if (looks_like_transcript(text)) {
    Transcript t = parse_transcript(text);
    ReplayVerdict v = replay(t);
    if (!v.ok) {
      out << path << ": FAILED at round " << v.round << ": " << v.message << "\n";
      return exit_invalid;
    }
    Certificate cert = certificate_from(t.moves);
    if (!cert.empty()) {
      CertificateVerdict c = check_certificate(cert);
      if (!c.ok) {
        out << path << ": FAILED at round " << c.failing_round << ": " << c.reason << "\n";
        return exit_invalid;
      }
    }
    out << path << ": ok (" << t.moves.size() << " moves replayed";
    if (!cert.empty()) out << ", " << cert.size() << " Diophantine rounds";
    out << ")\n";
    return exit_ok;
  }
  Certificate cert = parse_certificate(text);
  CertificateVerdict c = check_certificate(cert);
  if (!c.ok) {
    out << path << ": FAILED at round " << c.failing_round << ": " << c.reason << "\n";
    return exit_invalid;
  }
  out << path << ": ok (" << cert.size() << " certificate rounds)\n";
  return exit_ok;
}

inline int verify(const CliOptions& o, std::ostream& out, std::ostream& err) {
  int status = exit_ok;
  for (const auto& p : o.paths) {
    int s = verify_one(p, out, err);
    if (s > status) status = s;
  }
  return status;
}

inline PlayConfig play_config(const CliOptions& o) {
  PlayConfig cfg;
  cfg.preset = o.preset;
  cfg.human = parse_player(o.human);
  cfg.rounds = o.rounds;
  cfg.fuel = o.fuel;
  if (!o.system.empty()) cfg.system_text = read_file(o.system);
  if (!o.open_set.empty()) cfg.open_set_text = read_file(o.open_set);
  if (!o.presentation.empty()) cfg.presentation_text = read_file(o.presentation);
  return cfg;
}

inline void print_move(std::ostream& out, std::size_t index, const Move& m) {
  out << format_move_line(index / 2 + 1, m) << "\n";
}

// Terminal loop: one "c1 .. cn radius" line per human turn.
inline int play(const CliOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  PlaySession session(play_config(o));
  const auto& g = session.game();
  for (std::size_t i = 0; i < g.moves().size(); ++i) print_move(out, i, g.moves()[i]);
  std::string line;
  while (!g.finished()) {
    out << "round " << g.round() << " " << to_string(g.to_move()) << "> " << std::flush;
    if (!std::getline(in, line)) break;
    auto w = formats_detail::words(line);
    if (w.empty()) continue;
    if (w[0] == "quit") break;
    try {
      if (w.size() != g.space().dim + 1)
        throw Error(ErrorCode::parse_error, "enter " + std::to_string(g.space().dim) + " center coordinate(s) and a radius");
      Point c;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) c.push_back(Rational::parse(w[i]));
      if (g.space().kind == SpaceKind::torus) {
        for (auto& x : c) x = frac(x);
      }
      BasicOpen b{g.space().kind, std::move(c), Rational::parse(w.back())};
      std::size_t before = g.moves().size();
      auto added = session.submit(b);
      for (std::size_t i = 0; i < added.size(); ++i) print_move(out, before + i, added[i]);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
  }
  out << "\n";
  Certificate cert = session.certificate();
  write_outputs(o, session.transcript(), session.has_certificate() ? &cert : nullptr, out);
  return exit_ok;
}

inline int serve(const CliOptions& o, std::ostream& out, std::ostream& err) {
  SessionService service;
  httplib::Server server;
  mount(server, service);
  // Without SO_REUSEPORT, so a port that is already taken fails to bind.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });
  if (!server.bind_to_port(o.host, o.port)) {
    err << "cannot listen on " << o.host << ":" << o.port << " (port in use?)\n";
    return exit_usage;
  }
  out << "serving on http://" << o.host << ":" << o.port << "\n" << std::flush;
  server.listen_after_bind();
  return exit_ok;
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective Banach-Mazur games: demos, verification, play and serving"};
  app.require_subcommand(1);
  CliOptions o;
  auto common = [&](CLI::App* c) {
    c->add_option("--rounds", o.rounds, "rounds to play")->check(CLI::PositiveNumber);
    c->add_option("--fuel", o.fuel, "search budget")->check(CLI::PositiveNumber);
    c->add_option("--eps", o.eps, "precision for the limit point, as p/q");
    c->add_option("--out", o.out, "transcript output path (certificate goes to <out>.cert)");
  };
  auto* demo_l = app.add_subcommand("demo-liouville", "canonical P1 against the Liouville P2 strategy");
  common(demo_l);
  auto* demo_r = app.add_subcommand("demo-recurrence", "canonical P1 against the recurrence P2 strategy");
  common(demo_r);
  demo_r->add_option("--system", o.system, "system descriptor file");
  demo_r->add_option("--open-set", o.open_set, "open set E, one ball per line");
  demo_r->add_option("--horizon", o.horizon, "wandering probe horizon")->check(CLI::PositiveNumber);
  auto* ver = app.add_subcommand("verify", "replay transcripts and check certificates");
  ver->add_option("paths", o.paths, "transcript or certificate files")->required();
  auto* pl = app.add_subcommand("play", "play P1 (or P2) against a machine strategy on the terminal");
  common(pl);
  pl->add_option("--preset", o.preset, "liouville | rationals | recurrence | custom");
  pl->add_option("--human", o.human, "P1 or P2");
  pl->add_option("--system", o.system, "system descriptor file (recurrence)");
  pl->add_option("--open-set", o.open_set, "open set E file (recurrence)");
  pl->add_option("--presentation", o.presentation, "presentation file (custom)");
  auto* sv = app.add_subcommand("serve", "start the HTTP service");
  sv->add_option("--port", o.port, "TCP port")->check(CLI::Range(1, 65535));
  sv->add_option("--host", o.host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  try {
    if (demo_l->parsed()) return cli_detail::demo_liouville(o, out, err);
    if (demo_r->parsed()) return cli_detail::demo_recurrence(o, out, err);
    if (ver->parsed()) return cli_detail::verify(o, out, err);
    if (pl->parsed()) return cli_detail::play(o, in, out, err);
    if (sv->parsed()) return cli_detail::serve(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::avoidance_search_exhausted: return exit_wandering;
      case ErrorCode::parse_error:
      case ErrorCode::io_error:
      case ErrorCode::invalid_config:
      case ErrorCode::unknown_preset: return exit_usage;
      default: return exit_invalid;
    }
  }
  return exit_usage;
}

}  // namespace bmg

#endif  // BMG_CLI_HPP
