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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "clarith/error.hpp"
#include "clarith/harness.hpp"
#include "clarith/text.hpp"

namespace clarith {

Json to_json(const VerifySummary& s) {
  Json j = {{"passed", s.passed()},
            {"leaves", s.leaves},
            {"won", s.won},
            {"lost", s.lost},
            {"unknown", s.unknown},
            {"stalled", s.stalled},
            {"unknown_reasons", s.unknown_reasons}};
  if (s.counterexample)
    j["counterexample"] = {{"reason", s.counterexample->reason},
                           {"trace", to_json(s.counterexample->trace)}};
  return j;
}

VerifySummary verify(const StrategyPtr& s, const Formula& game,
                     const VerifyOptions& opt) {
  VerifySummary out;
  std::optional<std::vector<std::size_t>> prefix = std::vector<std::size_t>{};
  while (prefix) {
    ExhaustiveDriver env(opt.depth, opt.range, *prefix);
    PlayResult r = simulate(s, game, env, opt.bound, opt.limits);
    ++out.leaves;
    switch (r.verdict.kind) {
      case VerdictKind::Won: ++out.won; break;
      case VerdictKind::Stalled: ++out.stalled; break;
      case VerdictKind::Unknown:
        ++out.unknown;
        if (std::find(out.unknown_reasons.begin(), out.unknown_reasons.end(),
                      r.verdict.reason) == out.unknown_reasons.end())
          out.unknown_reasons.push_back(r.verdict.reason);
        break;
      case VerdictKind::Lost:
        ++out.lost;
        if (!out.counterexample ||
            r.verdict.trace.size() < out.counterexample->trace.size())
          out.counterexample = r.verdict;
        break;
    }
    prefix = ExhaustiveDriver::successor(env.decisions());
  }
  return out;
}

std::vector<Json> transcript(const Formula& game, Natural bound,
                             const PlayResult& r) {
  std::vector<Json> lines;
  lines.push_back({{"type", "start"}, {"game", to_string(game)}, {"bound", bound}});
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    const Labmove& m = r.history[i].run.back();
    lines.push_back({{"type", "move"},
                     {"index", i - 1},
                     {"step", r.history[i].step},
                     {"player", to_json(m.player)},
                     {"path", to_json(m.path)},
                     {"payload", to_json(m.payload)}});
  }
  Json end = {{"type", "verdict"},
              {"verdict", to_string(r.verdict.kind)},
              {"reason", r.verdict.reason},
              {"steps", r.steps}};
  if (r.verdict.kind == VerdictKind::Lost) end["trace"] = to_json(r.verdict.trace);
  lines.push_back(std::move(end));
  return lines;
}

std::string to_jsonl(const std::vector<Json>& lines) {
  std::string out;
  for (const auto& l : lines) out += l.dump() + "\n";
  return out;
}

Labmove parse_env_move(const std::string& text) {
  std::istringstream in(text);
  std::string where, what, extra;
  if (!(in >> where >> what) || (in >> extra))
    throw FormatError("expected '@path left|right|N', got '" + text + "'");
  Labmove m;
  m.player = Player::Environment;
  try {
    m.path = parse_path(where);
  } catch (const ScriptError& e) {
    throw FormatError(e.what());
  }
  if (what == "left") {
    m.payload = Payload::left();
  } else if (what == "right") {
    m.payload = Payload::right();
  } else {
    Natural c = 0;
    auto [end, ec] = std::from_chars(what.data(), what.data() + what.size(), c);
    if (ec != std::errc() || end != what.data() + what.size())
      throw FormatError("'" + what + "' is neither left, right nor a numeral");
    m.payload = Payload::constant_of(c);
  }
  return m;
}

std::optional<std::pair<StrategyPtr, Formula>> builtin_strategy(
    const std::string& name) {
  if (name == "ax8") return std::pair{axiom_strategy(AxiomTag::AX8, axiom8()), axiom8()};
  if (name == "halting") {
    Formula h = parse_formula("H(m, y)");
    Formula decider_game = choice_closure(Formula::ch_or(h, Formula::negation(h)));
    StrategyPtr decider = run_script(
        WitnessScript::parse({"wait m const @", "wait y const @", "if H(m, y)",
                              "move @ left", "else", "move @ right", "end"}),
        {}, decider_game);
    StrategyPtr s = is_combinator(decider, h, "y");
    return std::pair{s, s->sentence()};
  }
  return std::nullopt;
}

}  // namespace clarith
