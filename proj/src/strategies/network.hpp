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

// A network of sub-strategies wired together by copy links, optionally driven
// by a witness script. The engine plays the machine in the main game and the
// environment in every slot game.

#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clarith/strategy.hpp"

namespace clarith::detail {

struct SlotSpec {
  std::string name;
  StrategyPtr strategy;
};

class Network final : public Machine {
 public:
  /// All slots are started immediately. `script` may be null.
  Network(Formula main, std::vector<SlotSpec> slots, StrategyContext ctx,
          std::shared_ptr<const WitnessScript> script);

  /// Replaces the slot's instance with a fresh one and drops its links.
  void start_slot(const std::string& slot);
  /// Engine move in a slot game. Throws ScriptError when illegal.
  void feed(const std::string& slot, const Path& path, const Payload& payload);
  /// Throws ScriptError when the endpoints are not complementary copies.
  void link(const Endpoint& a, const Endpoint& b);

  Step step(std::span<const Labmove> incoming) override;
  std::uint64_t digest() const override;

 private:
  struct Slot {
    std::string name;
    StrategyPtr strategy;
    std::unique_ptr<Machine> machine;
    Formula current;
    std::vector<Labmove> inbox;
    std::deque<Labmove> outbox;
    Activity activity = Activity::Busy;
    std::uint64_t moves = 0;
  };
  struct Link {
    Endpoint a, b;
  };

  Slot& slot(const std::string& name);
  const Formula& view(const std::string& game);
  void route(const std::string& game, const Labmove& move);
  void check_unlinked(const std::string& game, const Path& path) const;
  bool script_blocked() const;
  bool run_script_instruction();
  Natural value(const Term& t, std::size_t line) const;
  Payload payload_of(const ScriptInstr& ins) const;
  void step_slot(Slot& s);

  Formula main_;
  std::uint64_t main_moves_ = 0;
  std::vector<Slot> slots_;
  std::vector<Link> links_;
  std::deque<Labmove> main_outbox_;
  std::deque<Labmove> main_inbox_;
  StrategyContext ctx_;

  std::shared_ptr<const WitnessScript> script_;
  std::size_t pc_ = 0;
  bool script_stalled_ = false;
  std::map<std::string, Natural> vars_;
};

}  // namespace clarith::detail
