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

// Test-side reference computations, written without the library's occurrence
// and search machinery.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "clarith/formula.hpp"
#include "clarith/machine.hpp"
#include "clarith/occurrence.hpp"
#include "clarith/simulate.hpp"

namespace clarith::testing {

/// Choice occurrences a player may move at, found by a direct walk: stop at
/// the first choice operator on every branch, flip sign under ~ and in an
/// antecedent.
inline void owned_choices(const Formula& f, bool negative, Path& path,
                          Player player, std::set<MoveTemplate>& out) {
  using K = Formula::Kind;
  if (f.is_choice()) {
    bool machine_kind = f.kind() == K::ChOr || f.kind() == K::ChEx;
    bool machine_owns = machine_kind != negative;
    if ((player == Player::Machine) != machine_owns) return;
    if (f.kind() == K::ChAnd || f.kind() == K::ChOr) {
      out.insert({player, path, Payload::Kind::Left});
      out.insert({player, path, Payload::Kind::Right});
    } else {
      out.insert({player, path, Payload::Kind::Const});
    }
    return;
  }
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    bool flip = f.kind() == K::Not || (f.kind() == K::Implies && i == 0);
    path.push_back(i);
    owned_choices(f.child(i), negative != flip, path, player, out);
    path.pop_back();
  }
}

inline std::set<MoveTemplate> owned_choices(const Formula& f, Player player) {
  std::set<MoveTemplate> out;
  Path path;
  owned_choices(f, false, path, player, out);
  return out;
}

/// Counts binary and quantifier choice occurrences a player owns.
inline std::pair<std::size_t, std::size_t> owned_counts(const Formula& f,
                                                        Player player) {
  std::size_t binary = 0, quant = 0;
  for (const auto& t : owned_choices(f, player)) {
    if (t.kind == Payload::Kind::Left) ++binary;
    if (t.kind == Payload::Kind::Const) ++quant;
  }
  return {binary, quant};
}

/// One move applied through the development list: the development whose
/// template matches, with the fresh variable replaced by the constant.
inline std::optional<Formula> develop(const Formula& f, const Labmove& m) {
  std::string y = fresh_var(all_vars(f), "w");
  for (const auto& d : developments(f, m.player, y)) {
    if (d.move.path != m.path || d.move.kind != m.payload.kind) continue;
    if (m.payload.kind == Payload::Kind::Const)
      return substitute(d.result, y, Term::numeral(m.payload.constant));
    return d.result;
  }
  return std::nullopt;
}

/// Least w <= limit with pred(w), by plain enumeration.
template <typename Pred>
std::optional<Natural> least_witness(Pred pred, Natural limit) {
  for (Natural w = 0; w <= limit; ++w)
    if (pred(w)) return w;
  return std::nullopt;
}

/// Leaf behaviours of an environment that stops or makes one of the legal
/// moves (constants 0..range) at each of at most `depth` turns, on a game
/// where the machine never moves.
inline std::size_t leaf_count(const Formula& f, std::size_t depth, Natural range) {
  if (depth == 0) return 1;
  std::set<MoveTemplate> env = owned_choices(f, Player::Environment);
  if (env.empty()) return 1;
  std::size_t total = 1;
  for (const auto& t : env) {
    std::vector<Payload> payloads;
    if (t.kind == Payload::Kind::Const) {
      for (Natural c = 0; c <= range; ++c) payloads.push_back(Payload::constant_of(c));
    } else {
      payloads.push_back(t.kind == Payload::Kind::Left ? Payload::left() : Payload::right());
    }
    for (const auto& p : payloads)
      total += leaf_count(*develop(f, {Player::Environment, t.path, p}), depth - 1, range);
  }
  return total;
}

/// Least y with machine `code` on input 0 halted within y steps, by direct
/// simulation.
inline std::optional<Natural> least_halting_step(Natural code, Natural max_steps) {
  auto h = rm_run(machine_by_code(code), 0, max_steps);
  if (!h) return std::nullopt;
  return h->step;
}

}  // namespace clarith::testing
