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
#include "clarith/text.hpp"

namespace clarith {
namespace {

class NodeChecker {
 public:
  NodeChecker(const Proof& p, const ProofNode& n, std::vector<Violation>& out)
      : proof_(p), node_(n), out_(out) {}

  void add(const std::string& condition, const std::string& message) {
    out_.push_back({node_.id, node_.rule, condition, message});
  }

  bool premise_count(std::size_t want) {
    if (node_.premises.size() == want) return true;
    add("premise-count", node_.rule + " takes " + std::to_string(want) +
                             " premise(s), found " +
                             std::to_string(node_.premises.size()));
    return false;
  }

  void premise_shape(std::size_t i, const Formula& want) {
    const Formula& got = proof_.node(node_.premises[i]).sentence;
    if (!alpha_equal(got, want))
      add("premise-shape", "premise " + std::to_string(i + 1) + " of " +
                               node_.rule + " must be " + to_string(want) +
                               ", found " + to_string(got));
  }

  void conclusion_shape(const Formula& want) {
    if (!alpha_equal(node_.sentence, want))
      add("conclusion-shape", node_.rule + " concludes " + to_string(want) +
                                  ", found " + to_string(node_.sentence));
  }

  // F and x of a rule instance; reports missing-annotation when absent.
  bool annotation() {
    if (node_.formula && node_.var) return true;
    add("missing-annotation",
        node_.rule + " needs its formula F(x) and variable x declared");
    return false;
  }

  bool elementary(const char* why) {
    if (is_elementary(*node_.formula)) return true;
    add("not-elementary", node_.rule + " requires " + why + ", found " +
                              to_string(*node_.formula));
    return false;
  }

  void check(SystemId system) {
    if (!is_sentence(node_.sentence)) {
      auto fv = free_vars(node_.sentence);
      add("not-a-sentence", "'" + to_string(node_.sentence) +
                                "' has free variable '" + *fv.begin() + "'");
    }
    auto rule = rule_from_string(node_.rule);
    if (!rule) {
      add("unknown-rule", "no rule named '" + node_.rule + "'");
      return;
    }
    if (!rule_in_system(*rule, system))
      add("rule-not-in-system",
          node_.rule + " is not a rule of " + to_string(system));
    try {
      check_shape(*rule);
    } catch (const CaptureError& e) {
      add("premise-shape", std::string("instance cannot be formed: ") + e.what());
    }
  }

 private:
  void check_shape(Rule rule) {
    switch (rule) {
      case Rule::PA1:
      case Rule::PA2:
      case Rule::PA3:
      case Rule::PA4:
      case Rule::PA5:
      case Rule::PA6:
        premise_count(0);
        if (!alpha_equal(node_.sentence, peano_axiom(rule)))
          add("axiom-shape", node_.rule + " is " + to_string(peano_axiom(rule)) +
                                 ", found " + to_string(node_.sentence));
        return;
      case Rule::PA7: {
        premise_count(0);
        if (!annotation() || !elementary("an elementary formula")) return;
        Formula want = pa7_instance(*node_.formula, *node_.var);
        if (!alpha_equal(node_.sentence, want))
          add("axiom-shape", "PA7 instance for the declared F(x) is " +
                                 to_string(want) + ", found " +
                                 to_string(node_.sentence));
        return;
      }
      case Rule::AX8:
        premise_count(0);
        if (!alpha_equal(node_.sentence, axiom8()))
          add("axiom-shape", "AX8 is " + to_string(axiom8()) + ", found " +
                                 to_string(node_.sentence));
        return;
      case Rule::LC:
        check_lc();
        return;
      case Rule::IND: {
        if (!annotation()) return;
        const Formula& f = *node_.formula;
        const std::string& x = *node_.var;
        if (premise_count(2)) {
          premise_shape(0, choice_closure(substitute(f, x, Term::zero())));
          premise_shape(1, choice_closure(Formula::implies(
                               f, substitute(f, x, Term::succ(Term::var(x))))));
        }
        conclusion_shape(choice_closure(f));
        return;
      }
      case Rule::FS: {
        if (!annotation()) return;
        const Formula& f = *node_.formula;
        const std::string& x = *node_.var;
        elementary("an elementary F(x)");
        if (premise_count(2)) {
          premise_shape(0, choice_closure(Formula::ch_or(f, Formula::negation(f))));
          premise_shape(1, choice_closure(Formula::exists(x, f)));
        }
        conclusion_shape(choice_closure(Formula::ch_ex(x, f)));
        return;
      }
      case Rule::IS: {
        if (!annotation()) return;
        const Formula& f = *node_.formula;
        const std::string& x = *node_.var;
        elementary("an elementary F(x)");
        if (premise_count(1))
          premise_shape(0, choice_closure(Formula::ch_or(f, Formula::negation(f))));
        conclusion_shape(choice_closure(
            Formula::implies(Formula::exists(x, f), Formula::ch_ex(x, f))));
        return;
      }
      case Rule::CONSTR: {
        if (!annotation()) return;
        const Formula& f = *node_.formula;
        const std::string& x = *node_.var;
        elementary("an elementary F(x)");
        bool leak = false;
        for (const auto& v : free_vars(f)) {
          if (v == x) continue;
          add("free-variable-leak", "CONSTR allows no free variable besides '" +
                                        x + "' in F, found '" + v + "'");
          leak = true;
        }
        // With a leak neither side can be a sentence; the shapes say nothing more.
        if (leak) return;
        if (premise_count(1)) premise_shape(0, Formula::exists(x, f));
        conclusion_shape(Formula::ch_ex(x, f));
        return;
      }
    }
  }

  void check_lc() {
    if (!node_.witness) {
      add("missing-witness", "LC needs a witness script");
      return;
    }
    const Witness& w = *node_.witness;
    if (w.slots.size() != node_.premises.size()) {
      add("bad-witness", "witness declares " + std::to_string(w.slots.size()) +
                             " slot(s) for " +
                             std::to_string(node_.premises.size()) + " premise(s)");
      return;
    }
    for (std::size_t i = 0; i < w.slots.size(); ++i) {
      if (w.slots[i] == "main" ||
          std::count(w.slots.begin(), w.slots.end(), w.slots[i]) > 1) {
        add("bad-witness", "slot name '" + w.slots[i] + "' is reserved or repeated");
        return;
      }
    }
    try {
      WitnessScript script = WitnessScript::parse(w.script);
      for (const auto& s : script.referenced_slots())
        if (std::find(w.slots.begin(), w.slots.end(), s) == w.slots.end())
          add("bad-witness", "script uses undefined slot '" + s + "'");
    } catch (const ScriptError& e) {
      add("bad-witness", e.what());
    }
  }

  const Proof& proof_;
  const ProofNode& node_;
  std::vector<Violation>& out_;
};

}  // namespace

Json to_json(const Violation& v) {
  return {{"node", v.node}, {"rule", v.rule}, {"condition", v.condition},
          {"message", v.message}};
}

std::vector<Violation> check_rule(const Proof& p, const ProofNode& node,
                                  SystemId system) {
  std::vector<Violation> out;
  NodeChecker(p, node, out).check(system);
  return out;
}

bool CheckReport::has(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

Json to_json(const CheckReport& r) {
  Json nodes = Json::array();
  for (const auto& [id, ok] : r.nodes) nodes.push_back({{"id", id}, {"ok", ok}});
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"system", to_string(r.system)},
          {"accepted", r.accepted},
          {"nodes", nodes},
          {"violations", violations}};
}

CheckReport check_proof(const Proof& p, SystemId system) {
  CheckReport r;
  r.system = system;
  if (p.empty()) {
    r.violations.push_back({"", "", "empty-proof", "the proof has no nodes"});
    return r;
  }
  for (const auto& n : p.nodes()) {
    auto v = check_rule(p, n, system);
    r.nodes.emplace_back(n.id, v.empty());
    r.violations.insert(r.violations.end(), v.begin(), v.end());
  }
  if (p.conclusion && !alpha_equal(*p.conclusion, p.root().sentence))
    r.violations.push_back({p.root().id, p.root().rule, "conclusion-mismatch",
                            "root proves " + to_string(p.root().sentence) +
                                ", the file claims " + to_string(*p.conclusion)});
  r.accepted = r.violations.empty();
  return r;
}

}  // namespace clarith
