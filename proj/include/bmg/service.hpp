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


// In-memory session store behind the HTTP API. `handle` is the whole API as
// a pure request -> reply function, so it can be exercised without sockets.
//
//   POST /sessions                  {"preset", "human", "rounds", "fuel", "system", "open_set", "presentation"}
//   GET  /sessions/{id}
//   POST /sessions/{id}/moves       {"center": ["p/q", ...] | "p/q", "radius": "p/q"}
//   GET  /sessions/{id}/certificate ?kind=certificate|transcript
//   GET  /presets
//
// Errors: {"error": {"code": "NotNested", "message": "..."}}.

#ifndef BMG_SERVICE_HPP
#define BMG_SERVICE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bmg/error.hpp"
#include "bmg/formats.hpp"
#include "bmg/play.hpp"

namespace bmg {

using Json = nlohmann::json;

struct Reply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

inline int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_session: return 404;
    case ErrorCode::not_nested:
    case ErrorCode::outside_region:
    case ErrorCode::wrong_turn:
    case ErrorCode::session_finished:
    case ErrorCode::avoidance_search_exhausted: return 409;
    case ErrorCode::strategy_violation: return 500;
    default: return 400;
  }
}

inline Reply error_reply(ErrorCode code, const std::string& message) {
  Json j{{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
  return Reply{http_status(code), "application/json", j.dump()};
}

inline Json ball_json(const BasicOpen& b) {
  Json center = Json::array();
  for (const auto& c : b.center) center.push_back(c.str());
  return Json{{"center", center}, {"radius", b.radius.str()}};
}

inline Json move_json(std::size_t index, const Move& m) {
  Json j = ball_json(m.ball);
  j["round"] = index / 2 + 1;
  j["player"] = to_string(m.player);
  Json note = Json::object();
  for (const auto& [k, v] : m.note.entries()) note[k] = v;
  j["annotation"] = note;
  j["annotation_text"] = m.note.str();
  return j;
}

class SessionService {
 public:
  Reply handle(const std::string& method, const std::string& path, const std::string& body,
               const std::map<std::string, std::string>& query = {}) {
    try {
      auto parts = formats_detail::split(path, '/');
      // "/a/b" splits to {"", "a", "b"}.
      if (parts.size() < 2 || !parts[0].empty()) return error_reply(ErrorCode::parse_error, "bad path " + path);
      parts.erase(parts.begin());
      if (!parts.empty() && parts.back().empty()) parts.pop_back();
      if (parts.size() == 1 && parts[0] == "presets" && method == "GET") return list_presets();
      if (parts.size() == 1 && parts[0] == "sessions" && method == "POST") return create(body);
      if (parts.size() == 2 && parts[0] == "sessions" && method == "GET") return state(parts[1]);
      if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "moves" && method == "POST")
        return post_move(parts[1], body);
      if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "certificate" && method == "GET") {
        auto it = query.find("kind");
        return certificate(parts[1], it == query.end() ? std::string() : it->second);
      }
      Reply r = error_reply(ErrorCode::parse_error, "no route for " + method + " " + path);
      r.status = 404;
      return r;
    } catch (const Error& e) {
      return error_reply(e.code(), e.what());
    } catch (const Json::exception& e) {
      return error_reply(ErrorCode::parse_error, e.what());
    }
  }

  std::size_t session_count() const {
    std::shared_lock lock(map_lock_);
    return sessions_.size();
  }

 private:
  struct Record {
    std::string id;
    mutable std::mutex lock;
    PlaySession session;

    Record(std::string i, PlayConfig cfg) : id(std::move(i)), session(std::move(cfg)) {}
  };

  static std::string text_field(const Json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return {};
    if (!j[key].is_string()) throw Error(ErrorCode::invalid_config, std::string(key) + " must be a string");
    return j[key].get<std::string>();
  }

  static std::size_t count_field(const Json& j, const char* key, std::size_t fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_unsigned()) throw Error(ErrorCode::invalid_config, std::string(key) + " must be a positive integer");
    return j[key].get<std::size_t>();
  }

  Reply list_presets() const {
    Json list = Json::array();
    for (const auto& p : presets()) list.push_back({{"name", p.name}, {"description", p.description}});
    return Reply{200, "application/json", Json{{"presets", list}}.dump()};
  }

  Reply create(const std::string& body) {
    Json j = body.empty() ? Json::object() : Json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::invalid_config, "session config must be an object");
    PlayConfig cfg;
    if (auto p = text_field(j, "preset"); !p.empty()) cfg.preset = p;
    if (auto h = text_field(j, "human"); !h.empty()) {
      if (h != "P1" && h != "P2") throw Error(ErrorCode::invalid_config, "human must be P1 or P2");
      cfg.human = parse_player(h);
    }
    cfg.rounds = count_field(j, "rounds", cfg.rounds);
    cfg.fuel = count_field(j, "fuel", cfg.fuel);
    cfg.system_text = text_field(j, "system");
    cfg.open_set_text = text_field(j, "open_set");
    cfg.presentation_text = text_field(j, "presentation");
    std::shared_ptr<Record> rec;
    {
      std::unique_lock lock(map_lock_);
      std::string id = "s" + std::to_string(++counter_);
      rec = std::make_shared<Record>(id, std::move(cfg));
      sessions_.emplace(id, rec);
    }
    std::lock_guard guard(rec->lock);
    Json out = snapshot(*rec);
    return Reply{201, "application/json", Json{{"id", rec->id}, {"state", out}}.dump()};
  }

  std::shared_ptr<Record> find(const std::string& id) const {
    std::shared_lock lock(map_lock_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw Error(ErrorCode::unknown_session, "no session '" + id + "'");
    return it->second;
  }

  static Json snapshot(const Record& rec) {
    const auto& s = rec.session;
    const auto& g = s.game();
    Json region = Json::array();
    for (const auto& r : g.space().region) region.push_back(ball_json(r));
    Json moves = Json::array();
    for (std::size_t i = 0; i < g.moves().size(); ++i) moves.push_back(move_json(i, g.moves()[i]));
    return Json{{"id", rec.id},
                {"preset", s.config().preset},
                {"human", to_string(s.config().human)},
                {"machine", s.setup().machine.descriptor},
                {"space", {{"kind", to_string(g.space().kind)}, {"dim", g.space().dim}, {"region", region}}},
                {"rounds", s.config().rounds},
                {"round", g.round()},
                {"to_move", to_string(g.to_move())},
                {"finished", g.finished()},
                {"moves", moves}};
  }

  Reply state(const std::string& id) const {
    auto rec = find(id);
    std::lock_guard guard(rec->lock);
    return Reply{200, "application/json", snapshot(*rec).dump()};
  }

  Reply post_move(const std::string& id, const std::string& body) {
    auto rec = find(id);
    Json j = Json::parse(body);
    if (!j.is_object() || !j.contains("center") || !j.contains("radius"))
      throw Error(ErrorCode::parse_error, "move needs center and radius");
    std::vector<std::string> coords;
    if (j["center"].is_string()) {
      coords = formats_detail::words(j["center"].get<std::string>());
    } else if (j["center"].is_array()) {
      for (const auto& c : j["center"]) coords.push_back(c.get<std::string>());
    } else {
      throw Error(ErrorCode::parse_error, "center must be a string or an array of strings");
    }
    if (!j["radius"].is_string()) throw Error(ErrorCode::parse_error, "radius must be a string");
    std::lock_guard guard(rec->lock);
    const Space& space = rec->session.game().space();
    if (coords.size() != space.dim) throw Error(ErrorCode::invalid_move, "center has the wrong dimension");
    Point c;
    for (const auto& x : coords) c.push_back(Rational::parse(x));
    Rational r = Rational::parse(j["radius"].get<std::string>());
    if (space.kind == SpaceKind::torus) {
      for (auto& x : c) x = frac(x);
    }
    BasicOpen g{space.kind, std::move(c), std::move(r)};
    std::size_t before = rec->session.game().moves().size();
    auto added = rec->session.submit(g);
    Json moves = Json::array();
    for (std::size_t i = 0; i < added.size(); ++i) moves.push_back(move_json(before + i, added[i]));
    return Reply{200, "application/json", Json{{"moves", moves}, {"state", snapshot(*rec)}}.dump()};
  }

  Reply certificate(const std::string& id, const std::string& kind) const {
    auto rec = find(id);
    std::lock_guard guard(rec->lock);
    const auto& s = rec->session;
    std::string k = kind.empty() ? (s.has_certificate() ? "certificate" : "transcript") : kind;
    if (k == "transcript") return Reply{200, "text/plain", format_transcript(s.transcript())};
    if (k == "certificate") {
      if (!s.has_certificate()) throw Error(ErrorCode::invalid_config, "this session records no Diophantine certificate");
      return Reply{200, "text/plain", format_certificate(s.certificate())};
    }
    throw Error(ErrorCode::invalid_config, "kind must be certificate or transcript");
  }

  mutable std::shared_mutex map_lock_;
  std::map<std::string, std::shared_ptr<Record>> sessions_;
  std::size_t counter_ = 0;
};

}  // namespace bmg

#endif  // BMG_SERVICE_HPP
