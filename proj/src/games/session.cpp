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

#include "clarith/session.hpp"

#include "clarith/error.hpp"
#include "clarith/text.hpp"

namespace clarith {

Adjudication adjudicate(const Formula& position, Natural bound) {
  Formula elementary = elementarization(position);
  Adjudication a;
  a.truth = eval_elementary(elementary, bound);
  const std::string shown = to_string(elementary);
  switch (a.truth.value()) {
    case Truth3::Value::True:
      a.winner = Player::Machine;
      a.reason = "elementarization " + shown + " is true";
      break;
    case Truth3::Value::False:
      a.winner = Player::Environment;
      a.reason = "elementarization " + shown + " is false";
      break;
    case Truth3::Value::Unknown:
      a.reason = "elementarization " + shown + " undecided at bound " +
                 std::to_string(bound) + ": " + a.truth.reason();
      break;
  }
  return a;
}

GameSession::GameSession(Formula root, Natural bound)
    : root_(root), current_(root), bound_(bound) {
  if (!is_sentence(root_))
    throw Error("game root must be a sentence: " + to_string(root_));
}

std::vector<MoveTemplate> GameSession::legal_moves(Player p) const {
  std::vector<MoveTemplate> out;
  if (adjudication_) return out;
  for (const auto& path : surface_choice_paths(current_)) {
    const Formula& node = subformula_at(current_, path);
    if (owner(node.kind(), *surface_polarity(current_, path)) != p) continue;
    if (node.is_binary()) {
      out.push_back({p, path, Payload::Kind::Left});
      out.push_back({p, path, Payload::Kind::Right});
    } else {
      out.push_back({p, path, Payload::Kind::Const});
    }
  }
  return out;
}

void GameSession::apply(const Labmove& move) {
  if (adjudication_)
    throw LegalityError("adjudicated", "the play is already adjudicated");
  if (auto bad = check_move(current_, move))
    throw LegalityError(bad->condition, bad->message, run_.size());
  current_ = clarith::apply_move(current_, move);
  run_.push_back(move);
}

const Adjudication& GameSession::adjudicate() {
  if (!adjudication_) adjudication_ = clarith::adjudicate(current_, bound_);
  return *adjudication_;
}

std::vector<MoveTemplate> legal_moves(const GameSession& s, Player p) {
  return s.legal_moves(p);
}

GameSession apply_move(GameSession s, const Labmove& move) {
  s.apply(move);
  return s;
}

}  // namespace clarith
