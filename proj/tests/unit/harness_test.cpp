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

#include <gtest/gtest.h>

#include <thread>

#include "builders.hpp"
#include "clarith/error.hpp"
#include "clarith/harness.hpp"
#include "corpus.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "printers.hpp"

namespace clarith {
namespace {

using Moves = clarith::Run;
using testing::Gen;

Formula P(const char* s) { return parse_formula(s); }

Json env_move_json(Path path, Natural c) {
  return to_json(Labmove{Player::Environment, std::move(path), Payload::constant_of(c)});
}

TEST(Verify, LeafCountMatchesDirectEnumeration) {
  for (const char* f : {"AAx. x = x", "AAx. AAy. x = y", "(0 = 0) && AAx. x = 0",
                        "(EEx. x = 0) -> 0 = 0", "~(0 = 0 vv 0 = 0')"}) {
    Formula game = P(f);
    for (std::size_t depth : {1, 2, 3}) {
      VerifyOptions opt;
      opt.depth = depth;
      opt.range = 3;
      VerifySummary v = verify(silent(game), game, opt);
      EXPECT_EQ(v.leaves, testing::leaf_count(game, depth, 3)) << f << " depth " << depth;
    }
  }
}

TEST(Verify, LeafCountOnGeneratedSentences) {
  Gen g(31);
  for (int i = 0; i < 60; ++i) {
    Formula game = g.sentence(1 + i % 3);
    VerifyOptions opt;
    opt.depth = 2;
    opt.range = 2;
    opt.limits.max_steps = 200;
    VerifySummary v = verify(silent(game), game, opt);
    EXPECT_EQ(v.leaves, testing::leaf_count(game, 2, 2)) << to_string(game);
    EXPECT_EQ(v.leaves, v.won + v.lost + v.unknown + v.stalled);
  }
}

TEST(Verify, WrongChoiceLosesWithOneMoveTrace) {
  StrategyPtr s = testing::script({"move @ right"}, "(0 = 0) vv ~(0 = 0)");
  VerifySummary v = verify(s, s->sentence());
  EXPECT_FALSE(v.passed());
  EXPECT_EQ(v.lost, v.leaves);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->trace,
            (Moves{{Player::Machine, {}, Payload::right()}}));
}

TEST(Verify, FsExampleWinsEveryPlay) {
  Proof p = load_proof_file(std::string(CLARITH_CORPUS_DIR) + "/valid/cla8_fs_double.json");
  StrategyPtr s = extract(p, SystemId::CLA8);
  VerifySummary v = verify(s, s->sentence());
  EXPECT_EQ(v.won, v.leaves);
  EXPECT_EQ(v.leaves, 10u);
}

TEST(Verify, IsWithFalseAntecedentWinsSilently) {
  Formula f = P("x + 0''' = 0''");
  StrategyPtr s = is_combinator(testing::oracle_decider(f), f, "x");
  VerifyOptions opt;
  opt.limits.max_steps = 2000;
  VerifySummary v = verify(s, s->sentence(), opt);
  EXPECT_EQ(v.won, v.leaves);
  PlayResult r = testing::play(s, {}, 32, opt.limits);
  EXPECT_TRUE(r.run.empty());
  EXPECT_EQ(r.verdict.kind, VerdictKind::Won);
}

TEST(Verify, SummaryJson) {
  VerifySummary v = verify(silent(P("0 = 0")), P("0 = 0"));
  Json j = to_json(v);
  EXPECT_EQ(j.at("leaves"), 1);
  EXPECT_EQ(j.at("won"), 1);
  EXPECT_EQ(j.at("lost"), 0);
}

std::string random_transcript(std::uint64_t seed) {
  auto [s, game] = *builtin_strategy("ax8");
  RandomDriver d(seed, 3, 8);
  return to_jsonl(transcript(game, 32, simulate(s, game, d, 32)));
}

TEST(RandomDriver, SameSeedSameTranscript) {
  for (std::uint64_t seed : {0, 1, 7, 99}) EXPECT_EQ(random_transcript(seed), random_transcript(seed));
}

TEST(RandomDriver, SeedsVary) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) seen.insert(random_transcript(seed));
  EXPECT_GT(seen.size(), 1u);
}

TEST(Transcript, LinesForAxiomEightPlay) {
  auto [s, game] = *builtin_strategy("ax8");
  ScriptedDriver d(Moves{{Player::Environment, {}, Payload::constant_of(3)}});
  auto lines = transcript(game, 32, simulate(s, game, d, 32));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].at("type"), "start");
  EXPECT_EQ(lines[0].at("game"), "AAx. EEy. y = x'");
  EXPECT_EQ(lines[1].at("type"), "move");
  EXPECT_EQ(lines[1].at("player"), "environment");
  EXPECT_EQ(lines[2].at("player"), "machine");
  EXPECT_EQ(lines[2].at("payload"), Json({{"const", 4}}));
  EXPECT_EQ(lines[3].at("type"), "verdict");
  EXPECT_EQ(lines[3].at("verdict"), "won");
  std::string text = to_jsonl(lines);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(Transcript, HaltingExampleAnswersLeastStep) {
  auto [s, game] = *builtin_strategy("halting");
  Limits lim;
  lim.max_steps = 20000;
  ScriptedDriver d(Moves{{Player::Environment, {}, Payload::constant_of(7)}});
  PlayResult r = simulate(s, game, d, 32, lim);
  auto least = testing::least_halting_step(7, 1000);
  ASSERT_TRUE(least);
  EXPECT_EQ(testing::machine_moves(r.run),
            (Moves{{Player::Machine, {1}, Payload::constant_of(*least)}}));
}

TEST(ParseEnvMove, Forms) {
  EXPECT_EQ(parse_env_move("@ 3"), (Labmove{Player::Environment, {}, Payload::constant_of(3)}));
  EXPECT_EQ(parse_env_move("@0.1 left"), (Labmove{Player::Environment, {0, 1}, Payload::left()}));
  EXPECT_EQ(parse_env_move("@1 right"), (Labmove{Player::Environment, {1}, Payload::right()}));
  for (const char* bad : {"", "@", "3", "@ x", "@ 3 4", "0.1 left", "@ -1"})
    EXPECT_THROW(parse_env_move(bad), FormatError) << bad;
}

TEST(Builtin, UnknownName) { EXPECT_FALSE(builtin_strategy("nope")); }

std::string created_id(const PlayServer::Response& r) {
  EXPECT_EQ(r.status, 201) << r.body.dump();
  return r.body.at("id").get<std::string>();
}

TEST(PlayServer, AxiomEightExchange) {
  PlayServer server;
  std::string id = created_id(server.create({{"builtin", "ax8"}}));
  auto st = server.state(id);
  EXPECT_EQ(st.status, 200);
  EXPECT_EQ(st.body.at("status"), "open");
  EXPECT_EQ(st.body.at("legal_moves").size(), 1u);

  auto mv = server.move(id, env_move_json({}, 3));
  ASSERT_EQ(mv.status, 200) << mv.body.dump();
  ASSERT_EQ(mv.body.at("replies").size(), 1u);
  EXPECT_EQ(mv.body.at("replies")[0].at("payload"), Json({{"const", 4}}));
  EXPECT_EQ(mv.body.at("current"), "0'''' = 0''''");

  auto adj = server.adjudicate(id);
  EXPECT_EQ(adj.body.at("status"), "finished");
  EXPECT_EQ(adj.body.at("adjudication").at("winner"), "machine");
}

TEST(PlayServer, CreateListClose) {
  PlayServer server;
  EXPECT_TRUE(server.list().body.at("sessions").empty());
  std::string a = created_id(server.create({{"builtin", "ax8"}}));
  std::string b = created_id(server.create({{"formula", "(0 = 0) vv (0 = 0')"}}));
  EXPECT_NE(a, b);
  EXPECT_EQ(server.list().body.at("sessions").size(), 2u);
  EXPECT_EQ(server.close(a).status, 200);
  EXPECT_EQ(server.state(a).status, 404);
  EXPECT_EQ(server.close(a).status, 404);
  EXPECT_EQ(server.list().body.at("sessions").size(), 1u);
}

TEST(PlayServer, BadRequests) {
  PlayServer server;
  EXPECT_EQ(server.create({{"builtin", "nope"}}).body.at("error").at("condition"),
            "unknown-builtin");
  EXPECT_EQ(server.create(Json::object()).status, 400);
  EXPECT_EQ(server.create({{"formula", "x = 0"}}).status, 400);
  EXPECT_EQ(server.create({{"formula", "0 ="}}).status, 400);
  EXPECT_EQ(server.move("42", env_move_json({}, 1)).status, 404);
}

TEST(PlayServer, IllegalMoveLeavesSessionIntact) {
  PlayServer server;
  std::string id = created_id(server.create({{"builtin", "ax8"}}));
  Json before = server.state(id).body;
  Json bad = to_json(Labmove{Player::Environment, {}, Payload::left()});
  auto r = server.move(id, bad);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body.at("error").at("condition"), "wrong-payload");
  EXPECT_FALSE(r.body.at("error").at("message").get<std::string>().empty());
  EXPECT_EQ(r.body.at("state"), before);
  EXPECT_EQ(server.state(id).body, before);
}

TEST(PlayServer, ClientMovesForBothPlayersWithoutStrategy) {
  PlayServer server;
  std::string id = created_id(server.create({{"formula", "AAx. EEy. y = x'"}}));
  EXPECT_EQ(server.state(id).body.at("machine"), "client");
  ASSERT_EQ(server.move(id, env_move_json({}, 1)).status, 200);
  Json m = to_json(Labmove{Player::Machine, {}, Payload::constant_of(2)});
  auto r = server.move(id, m);
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(r.body.at("run").size(), 2u);
  EXPECT_EQ(server.adjudicate(id).body.at("adjudication").at("winner"), "machine");
}

TEST(PlayServer, SessionsAreIsolated) {
  PlayServer server;
  std::string a = created_id(server.create({{"builtin", "ax8"}}));
  std::string b = created_id(server.create({{"formula", "AAx. AAy. x = y"}}));
  server.move(b, env_move_json({}, 5));
  server.move(a, env_move_json({}, 1));
  server.move(b, env_move_json({}, 5));
  Json sa = server.state(a).body, sb = server.state(b).body;
  EXPECT_EQ(sa.at("run").size(), 2u);
  EXPECT_EQ(sb.at("run").size(), 2u);
  for (const auto& m : sb.at("run")) EXPECT_EQ(m.at("payload"), Json({{"const", 5}}));
  EXPECT_EQ(sa.at("run")[0].at("payload"), Json({{"const", 1}}));
}

TEST(PlayServer, ConcurrentSessions) {
  PlayServer server;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(created_id(server.create({{"builtin", "ax8"}})));
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] { server.move(ids[i], env_move_json({}, 10 * i)); });
  for (auto& w : workers) w.join();
  for (int i = 0; i < 4; ++i) {
    Json run = server.state(ids[i]).body.at("run");
    ASSERT_EQ(run.size(), 2u);
    EXPECT_EQ(run[1].at("payload"), Json({{"const", 10 * i + 1}}));
  }
}

TEST(PlayServer, RoutesRequests) {
  PlayServer server;
  auto c = server.handle("POST", "/sessions", R"({"builtin": "ax8"})");
  std::string id = created_id(c);
  EXPECT_EQ(server.handle("GET", "/sessions", "").status, 200);
  EXPECT_EQ(server.handle("GET", "/sessions/" + id, "").status, 200);
  auto m = server.handle("POST", "/sessions/" + id + "/move", env_move_json({}, 2).dump());
  EXPECT_EQ(m.status, 200);
  EXPECT_EQ(server.handle("POST", "/sessions/" + id + "/adjudicate", "").status, 200);
  EXPECT_EQ(server.handle("POST", "/sessions/" + id + "/move", "{not json").status, 400);
  EXPECT_EQ(server.handle("GET", "/elsewhere", "").status, 404);
  EXPECT_EQ(server.handle("DELETE", "/sessions/" + id, "").status, 200);
  EXPECT_EQ(server.handle("GET", "/sessions/" + id, "").status, 404);
}

}  // namespace
}  // namespace clarith
