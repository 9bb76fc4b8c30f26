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

// Occurrences, labmoves, developments and the intensional yield.
//
// A path addresses a subformula occurrence by child indices from the root
// (0 = left operand, antecedent, negated formula or quantifier body;
// 1 = right operand or consequent). Paths are always relative to the current
// formula: after a move rewrites an occurrence, later moves address the
// rewritten formula.
//
// An occurrence is on the surface when no choice operator lies strictly above
// it. Negation and implication antecedents flip polarity; the machine owns
// positive vv / EE and negative && / AA occurrences, the environment owns the
// rest.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clarith/formula.hpp"

namespace clarith {

using Path = std::vector<std::uint32_t>;

enum class Player : std::uint8_t { Machine, Environment };

inline Player opponent(Player p) {
  return p == Player::Machine ? Player::Environment : Player::Machine;
}
const char* to_string(Player p);

enum class Polarity : std::uint8_t { Positive, Negative };

struct Payload {
  enum class Kind : std::uint8_t { Left, Right, Const };
  Kind kind = Kind::Left;
  Natural constant = 0;

  static Payload left() { return {Kind::Left, 0}; }
  static Payload right() { return {Kind::Right, 0}; }
  static Payload constant_of(Natural n) { return {Kind::Const, n}; }

  friend bool operator==(const Payload&, const Payload&) = default;
};

struct Labmove {
  Player player = Player::Environment;
  Path path;
  Payload payload;

  friend bool operator==(const Labmove&, const Labmove&) = default;
};

using Run = std::vector<Labmove>;

/// A legal move shape; Const templates stand for every natural.
struct MoveTemplate {
  Player player = Player::Environment;
  Path path;
  Payload::Kind kind = Payload::Kind::Left;

  friend bool operator==(const MoveTemplate&, const MoveTemplate&) = default;
  friend auto operator<=>(const MoveTemplate& a, const MoveTemplate& b) {
    if (auto c = a.player <=> b.player; c != 0) return c;
    if (auto c = a.path <=> b.path; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

std::string to_string(const Path& path);
std::string to_string(const Labmove& move);

const Formula& subformula_at(const Formula& f, const Path& path);
Formula replace_at(const Formula& f, const Path& path, const Formula& replacement);

/// Polarity of the occurrence if it is on the surface, nullopt otherwise
/// (including paths that do not exist).
std::optional<Polarity> surface_polarity(const Formula& f, const Path& path);

/// Who moves at a choice occurrence of the given kind and polarity.
Player owner(Formula::Kind choice_kind, Polarity polarity);

/// Every surface choice occurrence, in pre-order.
std::vector<Path> surface_choice_paths(const Formula& f);

/// Replaces every surface vv/EE occurrence by 0 = 0' and every surface &&/AA
/// occurrence by 0 = 0. The result is elementary.
Formula elementarization(const Formula& f);

struct Development {
  MoveTemplate move;
  /// For Const templates the body with the fresh variable in place of the
  /// bound one.
  Formula result;
};

/// The (player, y)-developments of `f`. `y` must not occur in `f`.
std::vector<Development> developments(const Formula& f, Player player,
                                      const std::string& y);

/// Why `move` is illegal at `f`, or nullopt when it is legal. Conditions are
/// "wrong-path", "non-surface", "wrong-player", "wrong-payload".
struct Illegality {
  std::string condition;
  std::string message;
};
std::optional<Illegality> check_move(const Formula& f, const Labmove& move);

/// Result of making a legal move; throws LegalityError otherwise.
Formula apply_move(const Formula& f, const Labmove& move);

/// <run>!f. Throws LegalityError carrying the index of the first illegal move.
Formula yield(const Formula& f, const Run& run);

}  // namespace clarith
