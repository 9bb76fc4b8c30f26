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

#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "clarith/error.hpp"
#include "clarith/strategy.hpp"

namespace clarith {

namespace {

void collect(const StrategyPtr& s, std::unordered_map<const Strategy*, std::string>& ids,
             Json& nodes) {
  if (ids.count(s.get())) return;
  Json args = Json::array();
  for (const auto& c : s->children()) {
    collect(c, ids, nodes);
    args.push_back(ids.at(c.get()));
  }
  std::string id = "s" + std::to_string(ids.size());
  ids.emplace(s.get(), id);
  Json node = {{"id", id}, {"combinator", s->combinator()}};
  Json fields = s->fields();
  for (auto& [k, v] : fields.items()) node[k] = v;
  node["args"] = std::move(args);
  nodes.push_back(std::move(node));
}

}  // namespace

Json strategy_to_json(const StrategyPtr& s) {
  std::unordered_map<const Strategy*, std::string> ids;
  Json nodes = Json::array();
  collect(s, ids, nodes);
  return {{"root", ids.at(s.get())}, {"nodes", std::move(nodes)}};
}

std::size_t strategy_node_count(const StrategyPtr& s) {
  std::set<const Strategy*> seen;
  std::function<void(const StrategyPtr&)> walk = [&](const StrategyPtr& n) {
    if (!seen.insert(n.get()).second) return;
    for (const auto& c : n->children()) walk(c);
  };
  walk(s);
  return seen.size();
}

StrategyPtr strategy_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("root"))
      throw FormatError("strategy file needs 'root' and 'nodes'");
    std::map<std::string, const Json*> by_id;
    for (const auto& n : j.at("nodes")) {
      std::string id = n.at("id").get<std::string>();
      if (!by_id.emplace(id, &n).second)
        throw FormatError("duplicate strategy node id '" + id + "'");
    }
    std::map<std::string, StrategyPtr> built;
    std::set<std::string> active;
    std::function<StrategyPtr(const std::string&)> build =
        [&](const std::string& id) -> StrategyPtr {
      if (auto it = built.find(id); it != built.end()) return it->second;
      auto it = by_id.find(id);
      if (it == by_id.end())
        throw FormatError("unknown strategy node '" + id + "'");
      if (!active.insert(id).second)
        throw FormatError("strategy node '" + id + "' is part of a cycle");
      const Json& n = *it->second;
      std::vector<StrategyPtr> args;
      if (n.contains("args"))
        for (const auto& a : n.at("args")) args.push_back(build(a.get<std::string>()));
      auto arg = [&](std::size_t i) -> StrategyPtr {
        if (i >= args.size())
          throw FormatError("strategy node '" + id + "' is missing argument " +
                            std::to_string(i));
        return args[i];
      };
      auto opt_arg = [&](std::size_t i) -> StrategyPtr {
        return i < args.size() ? args[i] : nullptr;
      };
      const std::string comb = n.at("combinator").get<std::string>();
      StrategyPtr s;
      try {
        if (comb == "silent") {
          s = silent(formula_from_json(n.at("sentence")));
        } else if (comb == "axiom") {
          auto tag = axiom_tag_from_string(n.at("axiom").get<std::string>());
          if (!tag) throw FormatError("unknown axiom in node '" + id + "'");
          s = axiom_strategy(*tag, formula_from_json(n.at("sentence")));
        } else if (comb == "copycat") {
          s = copycat(formula_from_json(n.at("game")));
        } else if (comb == "fs") {
          s = fs_combinator(arg(0), formula_from_json(n.at("formula")),
                            n.at("var").get<std::string>(), opt_arg(1));
        } else if (comb == "is") {
          s = is_combinator(arg(0), formula_from_json(n.at("formula")),
                            n.at("var").get<std::string>());
        } else if (comb == "constructivization") {
          std::optional<Natural> bound;
          if (n.contains("bound")) bound = n.at("bound").get<Natural>();
          s = constructivization_strategy(formula_from_json(n.at("formula")),
                                          n.at("var").get<std::string>(), bound,
                                          opt_arg(0));
        } else if (comb == "compose") {
          s = compose(arg(0), arg(1));
        } else if (comb == "induction") {
          s = induction_combinator(arg(0), arg(1),
                                   formula_from_json(n.at("formula")),
                                   n.at("var").get<std::string>());
        } else if (comb == "script") {
          auto names = n.at("slots").get<std::vector<std::string>>();
          if (names.size() != args.size())
            throw FormatError("script node '" + id + "' has " +
                              std::to_string(names.size()) + " slots but " +
                              std::to_string(args.size()) + " arguments");
          std::vector<std::pair<std::string, StrategyPtr>> slots;
          for (std::size_t i = 0; i < names.size(); ++i)
            slots.emplace_back(names[i], args[i]);
          s = run_script(
              WitnessScript::parse(n.at("script").get<std::vector<std::string>>()),
              std::move(slots), formula_from_json(n.at("sentence")));
        } else {
          throw FormatError("unknown combinator '" + comb + "' in node '" + id + "'");
        }
      } catch (const FormatError&) {
        throw;
      } catch (const Error& e) {
        throw FormatError("strategy node '" + id + "': " + e.what());
      }
      active.erase(id);
      built.emplace(id, s);
      return s;
    };
    return build(j.at("root").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed strategy file: ") + e.what());
  }
}

}  // namespace clarith
