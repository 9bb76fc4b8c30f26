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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clarith/serialize.hpp"
#include "clarith/simulate.hpp"
#include "clarith/strategy.hpp"

namespace clarith {

enum class SystemId : std::uint8_t { CLA8, CLA9, CLA10 };

std::optional<SystemId> system_from_string(const std::string& s);
const char* to_string(SystemId id);

/// Rule tags as they appear in proof files.
enum class Rule : std::uint8_t {
  PA1, PA2, PA3, PA4, PA5, PA6, PA7, AX8, LC, IND, FS, IS, CONSTR
};

std::optional<Rule> rule_from_string(const std::string& s);
const char* to_string(Rule r);
bool rule_in_system(Rule r, SystemId id);

/// The pinned Peano axioms PA1..PA6 (PA7 is a schema, see pa7_instance).
Formula peano_axiom(Rule r);
/// Universal closure of F(0) & Ax(F(x) -> F(x')) -> Ax F(x).
Formula pa7_instance(const Formula& f, const std::string& x);
/// AAx. EEy. y = x'
Formula axiom8();

struct Witness {
  std::vector<std::string> slots;
  std::vector<std::string> script;
};

struct ProofNode {
  std::string id;
  Formula sentence;
  std::string rule;
  std::vector<std::string> premises;
  /// F(x) and x for PA7, IND, FS, IS and CONSTR.
  std::optional<Formula> formula;
  std::optional<std::string> var;
  std::optional<Witness> witness;
  std::optional<std::string> description;
};

/// A proof DAG. Nodes are kept in topological order, premises first.
class Proof {
 public:
  std::optional<SystemId> system;
  std::optional<Formula> conclusion;
  std::optional<std::string> description;
  /// Corpus mutants: the violation condition the checker must report first.
  std::optional<std::string> expected_violation;

  bool empty() const { return nodes_.empty(); }
  const std::vector<ProofNode>& nodes() const { return nodes_; }
  const ProofNode& node(const std::string& id) const;
  const ProofNode& root() const;
  const std::string& root_id() const { return root_; }

  /// Validates ids, premises and acyclicity. Throws FormatError.
  static Proof from_nodes(std::vector<ProofNode> nodes, std::string root);

 private:
  std::vector<ProofNode> nodes_;
  std::map<std::string, std::size_t> index_;
  std::string root_;
};

/// Throws FormatError on schema violations, cycles and dangling premises.
Proof load_proof(const Json& j);
Proof load_proof_file(const std::string& path);
Json to_json(const Proof& p);

struct Violation {
  std::string node;
  std::string rule;
  std::string condition;
  std::string message;
};

Json to_json(const Violation& v);

/// Local check of one node against the rule schemas of `system`.
std::vector<Violation> check_rule(const Proof& p, const ProofNode& node,
                                  SystemId system);

struct CheckReport {
  SystemId system = SystemId::CLA8;
  bool accepted = false;
  std::vector<std::pair<std::string, bool>> nodes;
  std::vector<Violation> violations;

  bool has(const std::string& condition) const;
};

Json to_json(const CheckReport& r);

CheckReport check_proof(const Proof& p, SystemId system);

/// Strategy for the root sentence, built by structural recursion with one
/// strategy per proof node. Throws Error when the proof does not check.
StrategyPtr extract(const Proof& p, SystemId system);

struct StepRow {
  std::vector<std::uint64_t> steps_before_move;
  std::uint64_t total_steps = 0;
  VerdictKind verdict = VerdictKind::Unknown;
};

struct StepTable {
  std::vector<StepRow> rows;
  std::uint64_t max_steps_before_move = 0;
};

Json to_json(const StepTable& t);

/// Steps the strategy spends before each of its moves, per play.
StepTable measure_steps(const StrategyPtr& s, const Formula& game,
                        const std::vector<EnvironmentDriver*>& plays,
                        Natural bound, const Limits& limits = {});

}  // namespace clarith
