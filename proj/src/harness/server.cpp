// Copyright 2026 The Clarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clarith/error.hpp"
#include "clarith/harness.hpp"
#include "clarith/text.hpp"

namespace clarith {
namespace {

using Response = PlayServer::Response;

Response error(int status, const std::string& condition, const std::string& message) {
  return {status, {{"error", {{"condition", condition}, {"message", message}}}}};
}

Json adjudication_json(const Adjudication& a) {
  return {{"winner", a.winner ? Json(to_string(*a.winner)) : Json("unknown")},
          {"reason", a.reason}};
}

}  // namespace

struct PlayServer::Session {
  std::string id;
  std::mutex mu;
  std::optional<LivePlay> play;
  std::optional<GameSession> bare;
  std::vector<Labmove> last_replies;

  const GameSession& game() const { return play ? play->session() : *bare; }

  Json state() const {
    const GameSession& g = game();
    Json legal = Json::array();
    for (const auto& t : g.legal_moves(Player::Environment)) legal.push_back(to_json(t));
    if (!play)
      for (const auto& t : g.legal_moves(Player::Machine)) legal.push_back(to_json(t));
    bool finished = play ? play->verdict().has_value() : !g.is_open();
    Json j = {{"id", id},
              {"root", to_string(g.root())},
              {"current", to_string(g.current())},
              {"bound", g.bound()},
              {"run", to_json(g.run())},
              {"status", finished ? "finished" : "open"},
              {"machine", play ? "strategy" : "client"},
              {"legal_moves", finished ? Json::array() : legal}};
    if (play) {
      Json replies = Json::array();
      for (const auto& m : last_replies) replies.push_back(to_json(m));
      j["replies"] = std::move(replies);
    }
    if (g.adjudication()) j["adjudication"] = adjudication_json(*g.adjudication());
    if (play && play->verdict())
      j["verdict"] = {{"kind", to_string(play->verdict()->kind)},
                      {"reason", play->verdict()->reason}};
    return j;
  }
};

std::shared_ptr<PlayServer::Session> PlayServer::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response PlayServer::create(const Json& req) {
  auto s = std::make_shared<Session>();
  try {
    if (!req.is_object()) return error(400, "bad-request", "expected a JSON object");
    Natural bound = req.value("bound", Natural{32});
    std::optional<Formula> game;
    if (req.contains("formula")) game = formula_from_json(req.at("formula"));
    StrategyPtr strategy;
    if (req.contains("builtin")) {
      auto b = builtin_strategy(req.at("builtin").get<std::string>());
      if (!b) return error(400, "unknown-builtin", "no builtin strategy '" +
                                                     req.at("builtin").get<std::string>() + "'");
      strategy = b->first;
      if (!game) game = b->second;
    } else if (req.contains("strategy")) {
      strategy = strategy_from_json(req.at("strategy"));
      if (!game) game = strategy->sentence();
    }
    if (!game) return error(400, "bad-request", "session needs a formula");
    if (strategy) {
      s->play.emplace(strategy, *game, bound, limits_);
      s->last_replies = s->play->settle();
    } else {
      s->bare.emplace(*game, bound);
    }
  } catch (const nlohmann::json::exception& e) {
    return error(400, "bad-request", e.what());
  } catch (const Error& e) {
    return error(400, "bad-request", e.what());
  }
  std::lock_guard lock(mu_);
  s->id = std::to_string(next_id_++);
  sessions_.emplace(s->id, s);
  std::lock_guard slock(s->mu);
  return {201, s->state()};
}

Response PlayServer::list() const {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::lock_guard lock(mu_);
    for (const auto& [id, s] : sessions_) all.push_back(s);
  }
  Json out = Json::array();
  for (const auto& s : all) {
    std::lock_guard lock(s->mu);
    out.push_back({{"id", s->id},
                   {"root", to_string(s->game().root())},
                   {"status", s->state().at("status")}});
  }
  return {200, {{"sessions", out}}};
}

Response PlayServer::state(const std::string& id) const {
  auto s = find(id);
  if (!s) return error(404, "no-session", "no session '" + id + "'");
  std::lock_guard lock(s->mu);
  return {200, s->state()};
}

Response PlayServer::move(const std::string& id, const Json& req) {
  auto s = find(id);
  if (!s) return error(404, "no-session", "no session '" + id + "'");
  std::lock_guard lock(s->mu);
  Labmove m;
  try {
    m = labmove_from_json(req);
  } catch (const nlohmann::json::exception& e) {
    return error(400, "bad-request", e.what());
  } catch (const Error& e) {
    return error(400, "bad-request", e.what());
  }
  try {
    if (s->play) {
      if (s->play->verdict()) throw LegalityError("finished", "the play is over");
      s->play->env_move(m);
      s->last_replies = s->play->settle();
    } else {
      if (!s->bare->is_open()) throw LegalityError("finished", "the play is over");
      s->bare->apply(m);
    }
  } catch (const LegalityError& e) {
    Response r = error(400, e.condition(), e.what());
    r.body["state"] = s->state();
    return r;
  }
  return {200, s->state()};
}

Response PlayServer::adjudicate(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "no-session", "no session '" + id + "'");
  std::lock_guard lock(s->mu);
  if (s->play) {
    s->play->finish();
  } else if (s->bare->is_open()) {
    s->bare->adjudicate();
  }
  Json j = s->state();
  if (!j.contains("adjudication")) {
    const Verdict& v = *s->play->verdict();
    const char* winner = v.kind == VerdictKind::Won    ? "machine"
                         : v.kind == VerdictKind::Lost ? "environment"
                                                       : "unknown";
    j["adjudication"] = {{"winner", winner}, {"reason", v.reason}};
  }
  return {200, j};
}

Response PlayServer::close(const std::string& id) {
  std::lock_guard lock(mu_);
  if (!sessions_.erase(id)) return error(404, "no-session", "no session '" + id + "'");
  return {200, {{"closed", id}}};
}

Response PlayServer::handle(const std::string& method, const std::string& path,
                            const std::string& body) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < path.size();) {
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) parts.push_back(path.substr(i, j - i));
    i = j + 1;
  }
  auto parse = [&](Json& out) {
    try {
      out = body.empty() ? Json::object() : Json::parse(body);
      return true;
    } catch (const nlohmann::json::exception&) {
      return false;
    }
  };
  if (parts.empty() || parts[0] != "sessions")
    return error(404, "no-route", method + " " + path);
  Json req;
  if (parts.size() == 1) {
    if (method == "GET") return list();
    if (method == "POST") {
      if (!parse(req)) return error(400, "bad-request", "body is not JSON");
      return create(req);
    }
  } else if (parts.size() == 2) {
    if (method == "GET") return state(parts[1]);
    if (method == "DELETE") return close(parts[1]);
  } else if (parts.size() == 3 && method == "POST") {
    if (parts[2] == "move") {
      if (!parse(req)) return error(400, "bad-request", "body is not JSON");
      return move(parts[1], req);
    }
    if (parts[2] == "adjudicate") return adjudicate(parts[1]);
  }
  return error(404, "no-route", method + " " + path);
}

}  // namespace clarith
