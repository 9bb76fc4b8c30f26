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

// Small strategy and play helpers shared by the tests.

#pragma once

#include <string>
#include <vector>

#include "clarith/simulate.hpp"
#include "clarith/strategy.hpp"
#include "clarith/text.hpp"

namespace clarith::testing {

/// Script strategy for the choice closure of F vv ~F: read the constants in
/// closure order, then pick the disjunct the truth oracle confirms.
inline StrategyPtr oracle_decider(const Formula& f) {
  Formula game = choice_closure(Formula::ch_or(f, Formula::negation(f)));
  std::vector<std::string> lines;
  for (const auto& v : free_vars_ordered(f)) lines.push_back("wait " + v + " const @");
  lines.push_back("if " + to_string(f));
  for (const char* s : {"move @ left", "else", "move @ right", "end"}) lines.push_back(s);
  return run_script(WitnessScript::parse(lines), {}, game);
}

inline StrategyPtr script(const std::vector<std::string>& lines, const char* sentence,
                          std::vector<std::pair<std::string, StrategyPtr>> slots = {}) {
  return run_script(WitnessScript::parse(lines), std::move(slots),
                    parse_formula(sentence, true));
}

/// One play against a fixed list of environment moves, each made once the
/// machine is idle.
inline PlayResult play(const StrategyPtr& s, const Run& env, Natural bound = 32,
                       Limits limits = {}) {
  ScriptedDriver d(env);
  return simulate(s, s->sentence(), d, bound, limits);
}

inline Labmove env_const(Path path, Natural c) {
  return {Player::Environment, std::move(path), Payload::constant_of(c)};
}

inline Run machine_moves(const Run& run) {
  Run out;
  for (const auto& m : run)
    if (m.player == Player::Machine) out.push_back(m);
  return out;
}

/// Every play against an exhaustive environment, in enumeration order.
inline std::vector<PlayResult> all_plays(const StrategyPtr& s, const Formula& game,
                                         std::size_t depth, Natural range,
                                         Natural bound = 32, Limits limits = {}) {
  std::vector<PlayResult> out;
  std::vector<std::size_t> prefix;
  for (;;) {
    ExhaustiveDriver d(depth, range, prefix);
    out.push_back(simulate(s, game, d, bound, limits));
    auto next = ExhaustiveDriver::successor(d.decisions());
    if (!next) break;
    prefix = *next;
  }
  return out;
}

}  // namespace clarith::testing
