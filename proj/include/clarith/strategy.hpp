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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clarith/occurrence.hpp"
#include "clarith/script.hpp"
#include "clarith/serialize.hpp"

namespace clarith {

enum class Activity : std::uint8_t {
  Busy,         ///< has internal work left and wants to be stepped again
  Quiescent,    ///< will not move until a new observation arrives
  OracleStall,  ///< blocked on a truth the bounded oracle cannot settle
};

const char* to_string(Activity a);

struct Step {
  std::optional<Labmove> move;
  Activity activity = Activity::Quiescent;
};

/// A running instance of a strategy. It always plays as the machine in its
/// own game; paths are relative to the current yield of that game.
class Machine {
 public:
  virtual ~Machine() = default;

  /// Delivers the opponent moves made since the previous call and performs
  /// one unit of work. Throws Error on an internal fault.
  virtual Step step(std::span<const Labmove> incoming) = 0;

  /// Fingerprint of the internal state, recorded in histories.
  virtual std::uint64_t digest() const = 0;
};

struct StrategyContext {
  /// Truth-oracle bound used by oracle-backed decisions.
  Natural bound = 32;
};

class Strategy;
using StrategyPtr = std::shared_ptr<const Strategy>;

/// Immutable description of a deterministic interactive transducer. Starting
/// it yields an independent Machine; sub-strategies are shared.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual const char* combinator() const = 0;
  /// The game the strategy is built to win.
  virtual const Formula& sentence() const = 0;
  virtual std::vector<StrategyPtr> children() const { return {}; }
  virtual std::unique_ptr<Machine> start(const StrategyContext& ctx) const = 0;

  /// Combinator-specific fields, without id, combinator and args.
  virtual Json fields() const;
};

enum class AxiomTag : std::uint8_t { PA1, PA2, PA3, PA4, PA5, PA6, PA7, AX8 };

std::optional<AxiomTag> axiom_tag_from_string(const std::string& s);
const char* to_string(AxiomTag tag);

/// Plays nothing. Wins exactly the true elementary sentences.
StrategyPtr silent(Formula sentence);

/// Silent for PA1..PA7; for AX8 answers the environment's c with c + 1.
StrategyPtr axiom_strategy(AxiomTag tag, Formula sentence);

/// Plays E -> E by mirroring every move into the twin component.
StrategyPtr copycat(Formula game);

/// Strategy for the choice closure of EExF from one for the closure of
/// F vv ~F: probes x = 0, 1, 2, ... and names the first value the decider
/// answers left for. `support` is kept as a child without being run.
StrategyPtr fs_combinator(StrategyPtr decider, Formula f, std::string x,
                          StrategyPtr support = nullptr);

/// Same scan for the closure of ExF -> EExF, moving in the consequent.
StrategyPtr is_combinator(StrategyPtr decider, Formula f, std::string x);

/// Strategy for EExF, F elementary with at most x free: names the least n the
/// oracle confirms F(n) for, and stalls when the oracle cannot tell. A fixed
/// `bound` overrides the context bound. `support` is kept as a child.
StrategyPtr constructivization_strategy(Formula f, std::string x,
                                        std::optional<Natural> bound = {},
                                        StrategyPtr support = nullptr);

/// Strategy for F from strategies for E and E -> F. Throws Error when the
/// shapes do not fit.
StrategyPtr compose(StrategyPtr provider, StrategyPtr consumer);

/// Strategy for the choice closure of F from ones for the closures of F(0)
/// and F(x) -> F(x'): once x is fixed to c it runs the chain
/// base, step(0), ..., step(c - 1).
StrategyPtr induction_combinator(StrategyPtr base, StrategyPtr step, Formula f,
                                 std::string x);

/// Strategy for `sentence` given by a witness script over named slots.
/// Throws ScriptError when a referenced slot is missing.
StrategyPtr run_script(WitnessScript script,
                       std::vector<std::pair<std::string, StrategyPtr>> slots,
                       Formula sentence);

/// Strategy DAG as JSON: {"root": id, "nodes": [{id, combinator, ...}]}.
/// Shared sub-strategies are written once; ids are assigned in post-order.
Json strategy_to_json(const StrategyPtr& s);
/// Inverse of strategy_to_json. Throws FormatError.
StrategyPtr strategy_from_json(const Json& j);

/// Number of distinct strategy nodes reachable from `s`.
std::size_t strategy_node_count(const StrategyPtr& s);

}  // namespace clarith
