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
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clarith/session.hpp"
#include "clarith/strategy.hpp"

namespace clarith {

enum class VerdictKind : std::uint8_t { Won, Lost, Unknown, Stalled };

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;
  /// For Lost: the run that reproduces the loss.
  Run trace;
};

struct Limits {
  std::uint64_t max_steps = 100000;
  std::uint64_t max_moves = 10000;
};

struct HistoryEntry {
  std::uint64_t step = 0;
  Run run;
  std::uint64_t digest = 0;
};
using History = std::vector<HistoryEntry>;

Json to_json(const History& h);
History history_from_json(const Json& j);

struct EnvAction {
  enum class Kind : std::uint8_t { Move, Wait, Done };
  Kind kind = Kind::Done;
  Labmove move;

  static EnvAction play(Labmove m) { return {Kind::Move, std::move(m)}; }
  static EnvAction wait() { return {Kind::Wait, {}}; }
  static EnvAction done() { return {Kind::Done, {}}; }
};

/// The environment side of a simulated play. Asked once per tick until it
/// answers Done; `machine_busy` is false at tick 0 and whenever the machine
/// has settled.
class EnvironmentDriver {
 public:
  virtual ~EnvironmentDriver() = default;
  virtual EnvAction next(const GameSession& s, std::uint64_t tick,
                         bool machine_busy) = 0;
};

/// Every legal environment move at the current position, constants limited
/// to 0..range, in a fixed order.
std::vector<Labmove> environment_options(const GameSession& s, Natural range);

/// Plays a fixed list of moves. A move with a tick is made at that tick;
/// one without waits for the machine to settle.
class ScriptedDriver final : public EnvironmentDriver {
 public:
  struct Timed {
    Labmove move;
    std::optional<std::uint64_t> at;
  };
  explicit ScriptedDriver(std::vector<Timed> moves) : moves_(std::move(moves)) {}
  explicit ScriptedDriver(const Run& moves);
  EnvAction next(const GameSession& s, std::uint64_t tick, bool busy) override;

 private:
  std::vector<Timed> moves_;
  std::size_t next_ = 0;
};

/// One branch of the exhaustive enumeration: at each decision point chooses
/// among [stop] + environment_options, following `prefix` and then stopping.
class ExhaustiveDriver final : public EnvironmentDriver {
 public:
  struct Decision {
    std::size_t chosen;
    std::size_t options;
  };
  ExhaustiveDriver(std::size_t depth, Natural range,
                   std::vector<std::size_t> prefix = {})
      : depth_(depth), range_(range), prefix_(std::move(prefix)) {}
  EnvAction next(const GameSession& s, std::uint64_t tick, bool busy) override;
  const std::vector<Decision>& decisions() const { return decisions_; }

  /// The prefix of the branch after `decisions` in depth-first order.
  static std::optional<std::vector<std::size_t>> successor(
      const std::vector<Decision>& decisions);

 private:
  std::size_t depth_;
  Natural range_;
  std::vector<std::size_t> prefix_;
  std::vector<Decision> decisions_;
  std::size_t moves_ = 0;
};

/// Uniform choice among [stop] + environment_options; reproducible from seed.
class RandomDriver final : public EnvironmentDriver {
 public:
  RandomDriver(std::uint64_t seed, std::size_t depth, Natural range)
      : rng_(seed), depth_(depth), range_(range) {}
  EnvAction next(const GameSession& s, std::uint64_t tick, bool busy) override;

 private:
  std::mt19937_64 rng_;
  std::size_t depth_;
  Natural range_;
  std::size_t moves_ = 0;
};

/// Delegates to a callback, e.g. a human at a terminal.
class RemoteDriver final : public EnvironmentDriver {
 public:
  using Callback = std::function<EnvAction(const GameSession&, bool busy)>;
  explicit RemoteDriver(Callback cb) : cb_(std::move(cb)) {}
  EnvAction next(const GameSession& s, std::uint64_t, bool busy) override {
    return cb_(s, busy);
  }

 private:
  Callback cb_;
};

/// A play in progress between a strategy and an external environment.
class LivePlay {
 public:
  /// Throws Error when `game` is not the strategy's sentence up to renaming.
  LivePlay(StrategyPtr strategy, Formula game, Natural bound, Limits limits);

  const GameSession& session() const { return session_; }
  const History& history() const { return history_; }
  Activity activity() const { return activity_; }
  bool machine_busy() const { return activity_ == Activity::Busy; }
  std::uint64_t steps() const { return steps_; }
  /// Step count at which each machine move was made.
  const std::vector<std::uint64_t>& move_steps() const { return move_steps_; }
  /// Set once the play is over.
  const std::optional<Verdict>& verdict() const { return verdict_; }

  /// Throws LegalityError and leaves the play unchanged when the move is
  /// illegal.
  void env_move(const Labmove& m);

  /// Records that the environment broke the rules; it loses.
  void env_offended(const std::string& reason);

  /// One machine step; returns its move, if any. Faults and illegal machine
  /// moves end the play as Lost; exceeding the limits adjudicates it.
  std::optional<Labmove> step_machine();

  /// Steps until the machine is no longer busy or the play ends.
  std::vector<Labmove> settle();

  /// Ends the play and adjudicates the position reached.
  const Verdict& finish();

 private:
  void record();
  void end_by_limit(const std::string& what);

  StrategyPtr strategy_;
  GameSession session_;
  Limits limits_;
  std::unique_ptr<Machine> machine_;
  Run pending_;
  History history_;
  Activity activity_ = Activity::Busy;
  std::uint64_t steps_ = 0;
  std::vector<std::uint64_t> move_steps_;
  std::optional<Verdict> verdict_;
};

struct PlayResult {
  Run run;
  History history;
  Verdict verdict;
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> move_steps;
  std::optional<Adjudication> adjudication;
};

/// Deterministic co-execution of a strategy and an environment driver.
/// The environment may move at tick 0 and whenever the machine is not busy;
/// the play ends once the machine has settled and the driver is done.
PlayResult simulate(const StrategyPtr& s, const Formula& game,
                    EnvironmentDriver& env, Natural bound,
                    const Limits& limits = {});

/// Whether `a` is a well-formed history of a play on `x` whose last position
/// brings `x` down to `e` with its free variables, in first-occurrence order,
/// replaced by `c`.
bool history_predicate(const History& a, const Formula& x, const Formula& e,
                       const std::vector<Natural>& c);

}  // namespace clarith
