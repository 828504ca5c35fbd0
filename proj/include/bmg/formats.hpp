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


// Text formats shared by the CLI and the service. Rationals are always
// written "p/q"; multi-dimensional centers are space-separated.
//
// Transcript:
//   bmgame-transcript 1
//   space <euclidean|torus> <dim>
//   region whole                       | region <c1 .. cn> <radius>   (repeatable)
//   p1 <descriptor>
//   p2 <descriptor>
//   presentation <id>
//   round,player,center,radius,annotation
//   1,P1,1/2,1/2,-
//
// Certificate: one line per P2 round, "j,p,q,center,radius".

#ifndef BMG_FORMATS_HPP
#define BMG_FORMATS_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmg/basic_open.hpp"
#include "bmg/ce_open.hpp"
#include "bmg/dynamics.hpp"
#include "bmg/effective_sets.hpp"
#include "bmg/error.hpp"
#include "bmg/game.hpp"
#include "bmg/liouville.hpp"
#include "bmg/rational.hpp"

namespace bmg {

namespace formats_detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
}

inline std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

// Lines with comments ('#') and surrounding blanks removed; empty lines dropped.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t number = 0;
  for (auto& raw : split(text, '\n')) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, std::move(line));
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

inline Rational rational_at(std::size_t line, std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    fail(line, "bad rational '" + std::string(text) + "'");
  }
}

inline BasicOpen make_box(SpaceKind kind, Point center, Rational radius, std::size_t line) {
  try {
    if (kind == SpaceKind::torus) return arc(std::move(center), std::move(radius));
    return ball(std::move(center), std::move(radius));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

// "c1 .. cn r" -> box.
inline BasicOpen box_from_words(SpaceKind kind, std::size_t dim, const std::vector<std::string>& w,
                                std::size_t first, std::size_t line) {
  if (w.size() != first + dim + 1) fail(line, "expected " + std::to_string(dim) + " center coordinates and a radius");
  Point c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(rational_at(line, w[first + i]));
  return make_box(kind, std::move(c), rational_at(line, w[first + dim]), line);
}

inline SpaceKind parse_kind(std::string_view s, std::size_t line) {
  if (s == "euclidean") return SpaceKind::euclidean;
  if (s == "torus") return SpaceKind::torus;
  fail(line, "unknown space kind '" + std::string(s) + "'");
}

}  // namespace formats_detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  out << body;
  out.flush();
  if (!out) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

inline std::string format_move_line(std::size_t round, const Move& m) {
  return std::to_string(round) + "," + to_string(m.player) + "," + join(m.ball.center) + "," + m.ball.radius.str() +
         "," + m.note.str();
}

inline std::string format_transcript(const Transcript& t) {
  std::string out = "bmgame-transcript 1\n";
  out += "space " + to_string(t.space.kind) + " " + std::to_string(t.space.dim) + "\n";
  if (t.space.whole()) {
    out += "region whole\n";
  } else {
    for (const auto& r : t.space.region) out += "region " + join(r.center) + " " + r.radius.str() + "\n";
  }
  out += "p1 " + t.p1 + "\n";
  out += "p2 " + t.p2 + "\n";
  out += "presentation " + t.presentation + "\n";
  out += "round,player,center,radius,annotation\n";
  for (std::size_t i = 0; i < t.moves.size(); ++i) out += format_move_line(i / 2 + 1, t.moves[i]) + "\n";
  return out;
}

inline bool looks_like_transcript(std::string_view text) { return text.rfind("bmgame-transcript", 0) == 0; }

inline Transcript parse_transcript(std::string_view text) {
  using namespace formats_detail;
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::size_t i = 0;
  auto next = [&](std::string_view key) -> std::string {
    if (i >= lines.size()) fail(i + 1, "missing '" + std::string(key) + "' line");
    std::string line = trim(lines[i]);
    ++i;
    if (line.rfind(std::string(key) + " ", 0) != 0 && line != key) fail(i, "expected '" + std::string(key) + "'");
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
  };
  if (next("bmgame-transcript") != "1") fail(1, "unsupported transcript version");
  auto sw = words(next("space"));
  if (sw.size() != 2) fail(i, "space line needs kind and dimension");
  Transcript t;
  t.space.kind = parse_kind(sw[0], i);
  try {
    t.space.dim = std::stoul(sw[1]);
  } catch (const std::exception&) {
    fail(i, "bad dimension");
  }
  if (t.space.dim == 0) fail(i, "dimension must be positive");
  for (bool first = true; i < lines.size() && trim(lines[i]).rfind("region", 0) == 0; first = false) {
    auto rw = words(next("region"));
    if (rw.size() == 1 && rw[0] == "whole") {
      if (!first) fail(i, "'region whole' mixed with balls");
      break;
    }
    t.space.region.push_back(box_from_words(t.space.kind, t.space.dim, rw, 0, i));
  }
  t.p1 = next("p1");
  t.p2 = next("p2");
  t.presentation = next("presentation");
  if (i >= lines.size() || trim(lines[i]) != "round,player,center,radius,annotation") fail(i + 1, "missing move header");
  ++i;
  for (; i < lines.size(); ++i) {
    std::size_t number = i + 1;
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 5) fail(number, "expected 5 comma-separated fields");
    std::size_t round = 0;
    try {
      round = std::stoul(f[0]);
    } catch (const std::exception&) {
      fail(number, "bad round number");
    }
    if (round != t.moves.size() / 2 + 1) fail(number, "round number out of sequence");
    Move m;
    try {
      m.player = parse_player(f[1]);
      m.note = Annotation::parse(f[4]);
    } catch (const Error& e) {
      fail(number, e.what());
    }
    auto cw = words(f[2]);
    if (cw.size() != t.space.dim) fail(number, "center has the wrong dimension");
    Point c;
    for (const auto& x : cw) c.push_back(rational_at(number, x));
    // Moves are kept verbatim; whether they are legal is for replay to judge.
    m.ball = BasicOpen{t.space.kind, std::move(c), rational_at(number, trim(f[3]))};
    t.moves.push_back(std::move(m));
  }
  return t;
}

inline std::string format_certificate(const Certificate& c) {
  std::string out;
  for (const auto& r : c) {
    out += std::to_string(r.j) + "," + r.p.get_str() + "," + r.q.get_str() + "," + r.center.str() + "," +
           r.radius.str() + "\n";
  }
  return out;
}

inline Certificate parse_certificate(std::string_view text) {
  using namespace formats_detail;
  Certificate c;
  for (const auto& [number, line] : content_lines(text)) {
    auto f = split(line, ',');
    if (f.size() != 5) fail(number, "expected j,p,q,center,radius");
    CertificateRound r;
    try {
      r.j = std::stoul(trim(f[0]));
      r.p = integer_from_string(trim(f[1]));
      r.q = integer_from_string(trim(f[2]));
    } catch (const std::exception&) {
      fail(number, "bad integer field");
    }
    r.center = rational_at(number, trim(f[3]));
    r.radius = rational_at(number, trim(f[4]));
    c.push_back(std::move(r));
  }
  return c;
}

/// One layer generator per line; the file presents the union of its lines.
///   empty | lattice <shift> | singleton <x..> | cantor | inverse-powers
///   | liouville <n> | rationals <lo> <hi>
inline MeagerPresentation parse_presentation(std::string_view text, const Space& space = Space::line(0, 1)) {
  using namespace formats_detail;
  std::vector<MeagerPresentation> parts;
  for (const auto& [number, line] : content_lines(text)) {
    auto w = words(line);
    const std::string& kind = w[0];
    auto arity = [&, n = number](std::size_t k) {
      if (w.size() != k + 1) fail(n, "'" + kind + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (kind == "empty") {
      arity(0);
      parts.push_back(single_layer(empty_witness()));
    } else if (kind == "lattice") {
      arity(1);
      parts.push_back(single_layer(lattice_witness(rational_at(number, w[1]))));
    } else if (kind == "singleton") {
      if (w.size() != space.dim + 1) fail(number, "singleton needs a point of the space's dimension");
      Point x;
      for (std::size_t i = 1; i < w.size(); ++i) x.push_back(rational_at(number, w[i]));
      parts.push_back(single_layer(singleton_witness(std::move(x))));
    } else if (kind == "cantor") {
      arity(0);
      parts.push_back(single_layer(cantor_witness()));
    } else if (kind == "inverse-powers") {
      arity(0);
      parts.push_back(single_layer(inverse_powers_witness()));
    } else if (kind == "liouville") {
      arity(1);
      unsigned long n = 0;
      try {
        n = std::stoul(w[1]);
      } catch (const std::exception&) {
        fail(number, "bad layer index");
      }
      if (n == 0) fail(number, "Liouville layers start at 1");
      parts.push_back(single_layer(end_from_dense_ce_open(layer_enumerate(n, space))));
    } else if (kind == "rationals") {
      arity(2);
      Rational lo = rational_at(number, w[1]), hi = rational_at(number, w[2]);
      if (!(lo < hi)) fail(number, "rationals needs lo < hi");
      parts.push_back(rationals_presentation(lo, hi));
    } else {
      fail(number, "unknown layer kind '" + kind + "'");
    }
  }
  if (parts.empty()) throw Error(ErrorCode::parse_error, "presentation file has no layers");
  return meager_union(std::move(parts));
}

/// "key=value" tokens, e.g. "kind=rotation dim=1 rho=1/3".
inline Homeomorphism parse_system(std::string_view text) {
  using namespace formats_detail;
  std::map<std::string, std::string> kv;
  std::size_t last = 0;
  for (const auto& [number, line] : content_lines(text)) {
    last = number;
    for (const auto& tok : words(line)) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) fail(number, "expected key=value, got '" + tok + "'");
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  auto need = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) fail(last, "system file lacks '" + key + "'");
    return it->second;
  };
  std::string kind = need("kind");
  std::size_t dim = 1;
  if (kv.count("dim")) {
    try {
      dim = std::stoul(kv["dim"]);
    } catch (const std::exception&) {
      fail(last, "bad dim");
    }
  }
  if (dim == 0) fail(last, "dim must be positive");
  auto vector_of = [&](const std::string& key) {
    Point v;
    for (const auto& part : split(need(key), ',')) v.push_back(rational_at(last, part));
    if (v.size() != dim) fail(last, "'" + key + "' needs " + std::to_string(dim) + " components");
    return v;
  };
  try {
    if (kind == "rotation") return rotation_system(vector_of("rho"));
    if (kind == "translation") return translation_system(vector_of("v"));
    if (kind == "identity") {
      std::string space = kv.count("space") ? kv["space"] : "torus";
      return identity_system(space == "euclidean" ? Space::euclidean(dim) : Space::torus(dim));
    }
    if (kind == "permutation") {
      std::vector<std::size_t> perm;
      for (const auto& p : split(need("perm"), ',')) perm.push_back(std::stoul(p));
      std::vector<bool> reflect(perm.size(), false);
      if (kv.count("reflect")) {
        auto bits = split(kv["reflect"], ',');
        if (bits.size() != perm.size()) fail(last, "reflect mask size");
        for (std::size_t i = 0; i < bits.size(); ++i) reflect[i] = bits[i] == "1";
      }
      if (perm.size() != dim) fail(last, "perm needs dim entries");
      return permutation_system(std::move(perm), std::move(reflect));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    fail(last, e.what());
  } catch (const std::exception&) {
    fail(last, "bad number in system file");
  }
  fail(last, "unknown system kind '" + kind + "'");
}

/// One basic open per line, "c1 .. cn radius".
inline std::vector<BasicOpen> parse_open_set(std::string_view text, const Space& space) {
  using namespace formats_detail;
  std::vector<BasicOpen> out;
  for (const auto& [number, line] : content_lines(text)) {
    out.push_back(box_from_words(space.kind, space.dim, words(line), 0, number));
  }
  if (out.empty()) throw Error(ErrorCode::parse_error, "open-set file lists no balls");
  return out;
}

}  // namespace bmg

#endif  // BMG_FORMATS_HPP
