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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clarith/proof.hpp"
#include "clarith/simulate.hpp"

namespace clarith {

struct VerifyOptions {
  std::size_t depth = 3;
  Natural range = 8;
  Natural bound = 32;
  Limits limits;
};

/// Aggregate of one exhaustive verification.
struct VerifySummary {
  std::size_t leaves = 0;
  std::size_t won = 0;
  std::size_t lost = 0;
  std::size_t unknown = 0;
  std::size_t stalled = 0;
  /// The Lost play with the shortest trace, first in enumeration order.
  std::optional<Verdict> counterexample;
  /// Distinct reasons given for Unknown verdicts.
  std::vector<std::string> unknown_reasons;

  bool passed() const { return lost == 0; }
};

Json to_json(const VerifySummary& s);

/// Plays `s` against every environment behaviour of at most `depth` moves with
/// constants 0..range.
VerifySummary verify(const StrategyPtr& s, const Formula& game,
                     const VerifyOptions& opt = {});

/// One JSON object per line: a start record, one record per move in order,
/// and the verdict.
std::vector<Json> transcript(const Formula& game, Natural bound,
                             const PlayResult& r);
std::string to_jsonl(const std::vector<Json>& lines);

/// Reads an environment move written as "@path left", "@path right" or
/// "@path N". Throws FormatError.
Labmove parse_env_move(const std::string& text);

/// Strategies known by name to `play` and the play server.
std::optional<std::pair<StrategyPtr, Formula>> builtin_strategy(
    const std::string& name);

/// The play protocol without its transport. Requests and responses are JSON;
/// every handler returns an HTTP status with the body.
class PlayServer {
 public:
  struct Response {
    int status = 200;
    Json body;
  };

  explicit PlayServer(Limits limits = {}) : limits_(limits) {}

  /// {formula, bound?, strategy? | builtin?} creates a session. Without a
  /// strategy the client moves for both players.
  Response create(const Json& request);
  Response list() const;
  Response state(const std::string& id) const;
  /// {player, path, payload}. Illegal moves answer an error object and leave
  /// the session as it was.
  Response move(const std::string& id, const Json& request);
  Response adjudicate(const std::string& id);
  Response close(const std::string& id);

  /// Routes a request by method and path, e.g. ("POST", "/sessions/3/move").
  Response handle(const std::string& method, const std::string& path,
                  const std::string& body);

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id) const;

  Limits limits_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Serves `server` over HTTP until the process is stopped. Returns false when
/// the port cannot be bound.
bool serve_http(PlayServer& server, const std::string& host, int port);

}  // namespace clarith
