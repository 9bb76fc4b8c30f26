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

// Command-line front end: check, extract, verify, play, serve.
// Exit codes: 0 success, 1 rejected or lost, 2 malformed input.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "clarith/error.hpp"
#include "clarith/harness.hpp"
#include "clarith/text.hpp"

namespace {

using namespace clarith;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kMalformed = 2;

struct Options {
  std::string file;
  std::string system;
  std::string out;
  std::string formula;
  std::string builtin;
  std::string script;
  Natural bound = 32;
  std::size_t env_depth = 3;
  Natural range = 8;
  std::uint64_t max_steps = 100000;
  std::optional<std::uint64_t> seed;
  bool interactive = false;
  std::string host = "127.0.0.1";
  int port = 8080;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

SystemId system_for(const Options& o, const Proof& p) {
  if (!o.system.empty()) {
    auto s = system_from_string(o.system);
    if (!s) throw FormatError("unknown system '" + o.system + "'");
    return *s;
  }
  if (p.system) return *p.system;
  throw FormatError("no --system given and the proof names none");
}

bool is_strategy_file(const Json& j) {
  return j.is_object() && j.contains("nodes") && j.at("nodes").is_array() &&
         !j.at("nodes").empty() && j.at("nodes").front().contains("combinator");
}

// A strategy file, or a proof file extracted under --system.
StrategyPtr load_strategy(const Options& o) {
  Json j = read_json(o.file);
  if (is_strategy_file(j)) return strategy_from_json(j);
  Proof p = load_proof(j);
  return extract(p, system_for(o, p));
}

int cmd_check(const Options& o) {
  Proof p = load_proof_file(o.file);
  CheckReport r = check_proof(p, system_for(o, p));
  write_out(o.out, to_json(r).dump(2) + "\n");
  return r.accepted ? kOk : kRejected;
}

int cmd_extract(const Options& o) {
  Proof p = load_proof_file(o.file);
  SystemId system = system_for(o, p);
  CheckReport r = check_proof(p, system);
  if (!r.accepted) {
    std::cerr << to_json(r).dump(2) << "\n";
    return kRejected;
  }
  write_out(o.out, strategy_to_json(extract(p, system)).dump(2) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  StrategyPtr s = load_strategy(o);
  Formula game = o.formula.empty() ? s->sentence() : parse_formula(o.formula, true);
  if (!alpha_equal(game, s->sentence()))
    throw FormatError("strategy plays " + to_string(s->sentence()) + ", not " +
                      to_string(game));
  VerifyOptions opt;
  opt.depth = o.env_depth;
  opt.range = o.range;
  opt.bound = o.bound;
  opt.limits.max_steps = o.max_steps;
  VerifySummary v = verify(s, game, opt);
  Json j = to_json(v);
  j["game"] = to_string(game);
  write_out(o.out, j.dump(2) + "\n");
  if (!v.unknown_reasons.empty())
    std::cerr << "warning: " << v.unknown << " play(s) inconclusive\n";
  return v.passed() ? kOk : kRejected;
}

std::vector<ScriptedDriver::Timed> read_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::vector<ScriptedDriver::Timed> moves;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    moves.push_back({parse_env_move(line), std::nullopt});
  }
  return moves;
}

EnvAction ask_human(const GameSession& s, bool busy) {
  if (busy) return EnvAction::wait();
  std::cerr << "position: " << to_string(s.current()) << "\n";
  for (const auto& t : s.legal_moves(Player::Environment))
    std::cerr << "  legal: " << to_json(t).dump() << "\n";
  std::cerr << "move (@path left|right|N, or 'done')> " << std::flush;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line == "done" || line == "quit") return EnvAction::done();
    try {
      return EnvAction::play(parse_env_move(line));
    } catch (const FormatError& e) {
      std::cerr << e.what() << "\nmove> " << std::flush;
    }
  }
  return EnvAction::done();
}

int cmd_play(const Options& o) {
  StrategyPtr s;
  std::optional<Formula> game;
  if (!o.builtin.empty()) {
    auto b = builtin_strategy(o.builtin);
    if (!b) throw FormatError("no builtin strategy '" + o.builtin + "'");
    s = b->first;
    game = b->second;
  } else if (!o.file.empty()) {
    s = load_strategy(o);
  } else {
    throw FormatError("play needs a strategy file or --builtin");
  }
  if (!o.formula.empty()) game = parse_formula(o.formula, true);
  if (!game) game = s->sentence();

  std::unique_ptr<EnvironmentDriver> env;
  if (o.interactive)
    env = std::make_unique<RemoteDriver>(ask_human);
  else if (!o.script.empty())
    env = std::make_unique<ScriptedDriver>(read_script(o.script));
  else
    env = std::make_unique<RandomDriver>(o.seed.value_or(0), o.env_depth, o.range);

  Limits limits;
  limits.max_steps = o.max_steps;
  PlayResult r = simulate(s, *game, *env, o.bound, limits);
  write_out(o.out, to_jsonl(transcript(*game, o.bound, r)));
  return r.verdict.kind == VerdictKind::Lost ? kRejected : kOk;
}

int cmd_serve(const Options& o) {
  Limits limits;
  limits.max_steps = o.max_steps;
  PlayServer server(limits);
  std::cerr << "serving on http://" << o.host << ":" << o.port << "\n";
  if (!serve_http(server, o.host, o.port)) {
    std::cerr << "cannot listen on " << o.host << ":" << o.port << "\n";
    return kMalformed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clarith: proofs, strategies and plays for clarithmetic"};
  app.require_subcommand(1);
  Options o;

  auto add_system = [&](CLI::App* c) {
    c->add_option("--system", o.system, "CLA8, CLA9 or CLA10")
        ->check(CLI::IsMember({"CLA8", "CLA9", "CLA10"}));
  };
  auto add_play_flags = [&](CLI::App* c) {
    c->add_option("--bound", o.bound, "truth oracle bound");
    c->add_option("--env-depth", o.env_depth, "environment moves per play");
    c->add_option("--range", o.range, "largest constant the environment picks");
    c->add_option("--max-steps", o.max_steps, "machine step limit per play");
    c->add_option("--formula", o.formula, "game, defaults to the strategy's");
  };

  auto* check = app.add_subcommand("check", "check a proof file");
  check->add_option("proof", o.file)->required();
  add_system(check);
  check->add_option("-o,--out", o.out, "report file");

  auto* extract_cmd = app.add_subcommand("extract", "extract a strategy from a proof");
  extract_cmd->add_option("proof", o.file)->required();
  add_system(extract_cmd);
  extract_cmd->add_option("-o,--out", o.out, "strategy file");

  auto* verify_cmd = app.add_subcommand("verify", "play against every bounded environment");
  verify_cmd->add_option("file", o.file, "strategy or proof file")->required();
  add_system(verify_cmd);
  add_play_flags(verify_cmd);
  verify_cmd->add_option("-o,--out", o.out, "summary file");

  auto* play = app.add_subcommand("play", "play one game and print its transcript");
  play->add_option("file", o.file, "strategy or proof file");
  add_system(play);
  add_play_flags(play);
  play->add_option("--builtin", o.builtin, "ax8 or halting");
  auto* inter = play->add_flag("--interactive", o.interactive, "moves from stdin");
  play->add_option("--script", o.script, "file with one environment move per line")
      ->excludes(inter);
  play->add_option("--seed", o.seed, "random environment seed");
  play->add_option("-o,--out", o.out, "transcript file");

  auto* serve = app.add_subcommand("serve", "run the play server");
  serve->add_option("--port", o.port);
  serve->add_option("--host", o.host);
  serve->add_option("--max-steps", o.max_steps, "machine step limit per session");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*check) return cmd_check(o);
    if (*extract_cmd) return cmd_extract(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*play) return cmd_play(o);
    if (*serve) return cmd_serve(o);
  } catch (const clarith::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
