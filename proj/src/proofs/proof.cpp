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

#include "clarith/proof.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "clarith/error.hpp"
#include "clarith/text.hpp"

namespace clarith {
namespace {

constexpr const char* kRuleNames[] = {"PA1", "PA2", "PA3", "PA4", "PA5",
                                      "PA6", "PA7", "AX8", "LC",  "IND",
                                      "FS",  "IS",  "CONSTR"};

}  // namespace

std::optional<SystemId> system_from_string(const std::string& s) {
  if (s == "CLA8") return SystemId::CLA8;
  if (s == "CLA9") return SystemId::CLA9;
  if (s == "CLA10") return SystemId::CLA10;
  return std::nullopt;
}

const char* to_string(SystemId id) {
  switch (id) {
    case SystemId::CLA8: return "CLA8";
    case SystemId::CLA9: return "CLA9";
    default: return "CLA10";
  }
}

std::optional<Rule> rule_from_string(const std::string& s) {
  for (std::size_t i = 0; i < std::size(kRuleNames); ++i)
    if (s == kRuleNames[i]) return static_cast<Rule>(i);
  return std::nullopt;
}

const char* to_string(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

bool rule_in_system(Rule r, SystemId id) {
  switch (r) {
    case Rule::FS: return id == SystemId::CLA8;
    case Rule::IS: return id != SystemId::CLA8;
    case Rule::CONSTR: return id == SystemId::CLA10;
    default: return true;
  }
}

Formula peano_axiom(Rule r) {
  switch (r) {
    case Rule::PA1: return parse_formula("Ax. ~(0 = x')");
    case Rule::PA2: return parse_formula("Ax. Ay. x' = y' -> x = y");
    case Rule::PA3: return parse_formula("Ax. x + 0 = x");
    case Rule::PA4: return parse_formula("Ax. Ay. x + y' = (x + y)'");
    case Rule::PA5: return parse_formula("Ax. x * 0 = 0");
    case Rule::PA6: return parse_formula("Ax. Ay. x * y' = (x * y) + x");
    default: throw Error(std::string(to_string(r)) + " is not a fixed axiom");
  }
}

Formula pa7_instance(const Formula& f, const std::string& x) {
  Formula step = Formula::forall(
      x, Formula::implies(f, substitute(f, x, Term::succ(Term::var(x)))));
  Formula schema = Formula::implies(
      Formula::conj(substitute(f, x, Term::zero()), step), Formula::forall(x, f));
  auto vars = free_vars_ordered(schema);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    schema = Formula::forall(*it, schema);
  return schema;
}

Formula axiom8() { return parse_formula("AAx. EEy. y = x'"); }

const ProofNode& Proof::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("no proof node '" + id + "'");
  return nodes_[it->second];
}

const ProofNode& Proof::root() const { return node(root_); }

Proof Proof::from_nodes(std::vector<ProofNode> nodes, std::string root) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id.empty()) throw FormatError("proof node with empty id");
    if (!index.emplace(nodes[i].id, i).second)
      throw FormatError("duplicate proof node id '" + nodes[i].id + "'");
  }
  for (const auto& n : nodes)
    for (const auto& p : n.premises)
      if (!index.count(p))
        throw FormatError("node '" + n.id + "' cites missing premise '" + p + "'");
  if (!nodes.empty() && !index.count(root))
    throw FormatError("root '" + root + "' is not a node");

  // Depth-first topological sort; a grey node reached again closes a cycle.
  std::vector<int> color(nodes.size(), 0);
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (color[i] == 2) return;
    if (color[i] == 1)
      throw FormatError("proof has a cycle through node '" + nodes[i].id + "'");
    color[i] = 1;
    for (const auto& p : nodes[i].premises) visit(index.at(p));
    color[i] = 2;
    order.push_back(i);
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) visit(i);

  Proof proof;
  for (auto i : order) {
    proof.index_.emplace(nodes[i].id, proof.nodes_.size());
    proof.nodes_.push_back(std::move(nodes[i]));
  }
  proof.root_ = std::move(root);
  return proof;
}

Proof load_proof(const Json& j) {
  try {
    if (!j.is_object()) throw FormatError("proof file must be a JSON object");
    if (!j.contains("nodes") || !j.at("nodes").is_array())
      throw FormatError("proof file needs a 'nodes' array");
    std::vector<ProofNode> nodes;
    for (const auto& n : j.at("nodes")) {
      if (!n.is_object()) throw FormatError("proof node must be an object");
      ProofNode node{n.at("id").get<std::string>(),
                     formula_from_json(n.at("sentence")),
                     n.at("rule").get<std::string>(),
                     {}, {}, {}, {}, {}};
      if (n.contains("premises"))
        node.premises = n.at("premises").get<std::vector<std::string>>();
      if (n.contains("formula")) node.formula = formula_from_json(n.at("formula"));
      if (n.contains("var")) node.var = n.at("var").get<std::string>();
      if (n.contains("witness")) {
        const Json& w = n.at("witness");
        Witness wit;
        if (w.contains("slots")) wit.slots = w.at("slots").get<std::vector<std::string>>();
        wit.script = w.at("script").get<std::vector<std::string>>();
        node.witness = std::move(wit);
      }
      if (n.contains("description"))
        node.description = n.at("description").get<std::string>();
      nodes.push_back(std::move(node));
    }
    std::string root;
    if (j.contains("root")) root = j.at("root").get<std::string>();
    else if (!nodes.empty()) root = nodes.back().id;
    Proof p = Proof::from_nodes(std::move(nodes), std::move(root));
    if (j.contains("system")) {
      auto s = system_from_string(j.at("system").get<std::string>());
      if (!s) throw FormatError("unknown system '" + j.at("system").get<std::string>() + "'");
      p.system = s;
    }
    if (j.contains("conclusion")) p.conclusion = formula_from_json(j.at("conclusion"));
    if (j.contains("description")) p.description = j.at("description").get<std::string>();
    if (j.contains("expected_violation"))
      p.expected_violation = j.at("expected_violation").get<std::string>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed proof: ") + e.what());
  } catch (const SyntaxError& e) {
    throw FormatError(std::string("malformed formula in proof: ") + e.what());
  }
}

Proof load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open proof file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
  return load_proof(j);
}

Json to_json(const Proof& p) {
  Json j = Json::object();
  if (p.system) j["system"] = to_string(*p.system);
  if (p.description) j["description"] = *p.description;
  if (p.expected_violation) j["expected_violation"] = *p.expected_violation;
  if (p.conclusion) j["conclusion"] = to_string(*p.conclusion);
  if (!p.empty()) j["root"] = p.root_id();
  Json nodes = Json::array();
  for (const auto& n : p.nodes()) {
    Json o = {{"id", n.id}, {"sentence", to_string(n.sentence)}, {"rule", n.rule},
              {"premises", n.premises}};
    if (n.formula) o["formula"] = to_string(*n.formula);
    if (n.var) o["var"] = *n.var;
    if (n.witness)
      o["witness"] = {{"slots", n.witness->slots}, {"script", n.witness->script}};
    if (n.description) o["description"] = *n.description;
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

}  // namespace clarith
