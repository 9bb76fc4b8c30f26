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

#include <optional>
#include <string>
#include <vector>

#include "clarith/occurrence.hpp"
#include "clarith/truth.hpp"

namespace clarith {

/// Outcome of adjudicating a finished play. `winner` is empty when the truth
/// oracle could not settle the elementarization at the session bound.
struct Adjudication {
  std::optional<Player> winner;
  Truth3 truth = Truth3::unknown("not adjudicated");
  std::string reason;
};

/// Winner of a play that ended in `position`: the machine wins iff the
/// elementarization of the position is true.
Adjudication adjudicate(const Formula& position, Natural bound);

/// One play of the game a sentence denotes. `current()` is always the yield of
/// `run()` on `root()`.
class GameSession {
 public:
  /// Throws Error when `root` has free variables.
  GameSession(Formula root, Natural bound);

  const Formula& root() const { return root_; }
  const Run& run() const { return run_; }
  const Formula& current() const { return current_; }
  Natural bound() const { return bound_; }

  bool is_open() const { return !adjudication_; }
  const std::optional<Adjudication>& adjudication() const {
    return adjudication_;
  }

  /// Legal moves of `p` at the current position; Const templates stand for
  /// any natural. Empty once adjudicated.
  std::vector<MoveTemplate> legal_moves(Player p) const;

  /// Extends the run. Throws LegalityError naming the violated condition;
  /// the session is unchanged on error.
  void apply(const Labmove& move);

  /// Declares the play finished and records the verdict.
  const Adjudication& adjudicate();

 private:
  Formula root_;
  Run run_;
  Formula current_;
  Natural bound_;
  std::optional<Adjudication> adjudication_;
};

std::vector<MoveTemplate> legal_moves(const GameSession& s, Player p);
GameSession apply_move(GameSession s, const Labmove& move);

}  // namespace clarith
