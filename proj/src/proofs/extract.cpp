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

#include "clarith/error.hpp"
#include "clarith/proof.hpp"

namespace clarith {

StrategyPtr extract(const Proof& p, SystemId system) {
  CheckReport report = check_proof(p, system);
  if (!report.accepted) {
    const Violation& v = report.violations.front();
    throw Error("proof does not check in " + std::string(to_string(system)) +
                ": " + v.condition + " at node '" + v.node + "': " + v.message);
  }
  // Nodes are topologically sorted, so premises are built before their users.
  std::map<std::string, StrategyPtr> built;
  for (const auto& n : p.nodes()) {
    auto premise = [&](std::size_t i) { return built.at(n.premises.at(i)); };
    Rule rule = *rule_from_string(n.rule);
    StrategyPtr s;
    switch (rule) {
      case Rule::PA1:
      case Rule::PA2:
      case Rule::PA3:
      case Rule::PA4:
      case Rule::PA5:
      case Rule::PA6:
      case Rule::PA7:
      case Rule::AX8:
        s = axiom_strategy(static_cast<AxiomTag>(rule), n.sentence);
        break;
      case Rule::LC: {
        std::vector<std::pair<std::string, StrategyPtr>> slots;
        for (std::size_t i = 0; i < n.premises.size(); ++i)
          slots.emplace_back(n.witness->slots[i], premise(i));
        s = run_script(WitnessScript::parse(n.witness->script), std::move(slots),
                       n.sentence);
        break;
      }
      case Rule::IND:
        s = induction_combinator(premise(0), premise(1), *n.formula, *n.var);
        break;
      case Rule::FS:
        s = fs_combinator(premise(0), *n.formula, *n.var, premise(1));
        break;
      case Rule::IS:
        s = is_combinator(premise(0), *n.formula, *n.var);
        break;
      case Rule::CONSTR:
        s = constructivization_strategy(*n.formula, *n.var, std::nullopt,
                                        premise(0));
        break;
    }
    built.emplace(n.id, std::move(s));
  }
  return built.at(p.root_id());
}

Json to_json(const StepTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"steps_before_move", r.steps_before_move},
                    {"total_steps", r.total_steps},
                    {"verdict", to_string(r.verdict)}});
  return {{"rows", rows}, {"max_steps_before_move", t.max_steps_before_move}};
}

StepTable measure_steps(const StrategyPtr& s, const Formula& game,
                        const std::vector<EnvironmentDriver*>& plays,
                        Natural bound, const Limits& limits) {
  StepTable t;
  for (EnvironmentDriver* env : plays) {
    PlayResult r = simulate(s, game, *env, bound, limits);
    StepRow row;
    std::uint64_t prev = 0;
    for (auto at : r.move_steps) {
      row.steps_before_move.push_back(at - prev);
      prev = at;
    }
    row.total_steps = r.steps;
    row.verdict = r.verdict.kind;
    for (auto k : row.steps_before_move)
      t.max_steps_before_move = std::max(t.max_steps_before_move, k);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace clarith
