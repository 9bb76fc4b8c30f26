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

#include "clarith/occurrence.hpp"

#include "clarith/error.hpp"
#include "clarith/text.hpp"

namespace clarith {

const char* to_string(Player p) {
  return p == Player::Machine ? "machine" : "environment";
}

std::string to_string(const Path& path) {
  std::string out = "@";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string to_string(const Labmove& move) {
  std::string out = move.player == Player::Machine ? "T " : "B ";
  out += to_string(move.path);
  switch (move.payload.kind) {
    case Payload::Kind::Left: out += " left"; break;
    case Payload::Kind::Right: out += " right"; break;
    case Payload::Kind::Const:
      out += " const " + std::to_string(move.payload.constant);
      break;
  }
  return out;
}

const Formula& subformula_at(const Formula& f, const Path& path) {
  const Formula* cur = &f;
  for (auto i : path) {
    if (i >= cur->arity())
      throw LegalityError("wrong-path", "path " + to_string(path) +
                                            " does not address an occurrence");
    cur = &cur->child(i);
  }
  return *cur;
}

namespace {

Formula rebuild(const Formula& parent, std::size_t index, Formula child) {
  if (parent.kind() == Formula::Kind::Not) return Formula::negation(child);
  if (parent.is_quantifier())
    return Formula::quantifier(parent.kind(), parent.var(), child);
  return index == 0 ? Formula::binary(parent.kind(), child, parent.child(1))
                    : Formula::binary(parent.kind(), parent.child(0), child);
}

Formula replace_from(const Formula& f, const Path& path, std::size_t at,
                     const Formula& replacement) {
  if (at == path.size()) return replacement;
  if (path[at] >= f.arity())
    throw LegalityError("wrong-path", "path " + to_string(path) +
                                          " does not address an occurrence");
  return rebuild(f, path[at],
                 replace_from(f.child(path[at]), path, at + 1, replacement));
}

Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

Polarity child_polarity(const Formula& parent, std::size_t index, Polarity p) {
  if (parent.kind() == Formula::Kind::Not) return flip(p);
  if (parent.kind() == Formula::Kind::Implies && index == 0) return flip(p);
  return p;
}

void collect_surface(const Formula& f, Path& path, std::vector<Path>& out) {
  if (f.is_choice()) {
    out.push_back(path);
    return;
  }
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    path.push_back(i);
    collect_surface(f.child(i), path, out);
    path.pop_back();
  }
}

// Independent of the path machinery: rebuilds each development bottom-up
// while walking the surface.
void collect_developments(const Formula& f, Player player, const std::string& y,
                          Polarity polarity, Path& path,
                          std::vector<Development>& out) {
  if (f.is_choice()) {
    if (owner(f.kind(), polarity) != player) return;
    if (f.is_binary()) {
      out.push_back({{player, path, Payload::Kind::Left}, f.child(0)});
      out.push_back({{player, path, Payload::Kind::Right}, f.child(1)});
    } else {
      out.push_back({{player, path, Payload::Kind::Const},
                     substitute(f.body(), f.var(), Term::var(y))});
    }
    return;
  }
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    std::vector<Development> inner;
    path.push_back(i);
    collect_developments(f.child(i), player, y, child_polarity(f, i, polarity),
                         path, inner);
    path.pop_back();
    for (auto& d : inner) {
      d.result = rebuild(f, i, d.result);
      out.push_back(std::move(d));
    }
  }
}

}  // namespace

Formula replace_at(const Formula& f, const Path& path,
                   const Formula& replacement) {
  return replace_from(f, path, 0, replacement);
}

std::optional<Polarity> surface_polarity(const Formula& f, const Path& path) {
  const Formula* cur = &f;
  Polarity p = Polarity::Positive;
  for (auto i : path) {
    if (i >= cur->arity() || cur->is_choice()) return std::nullopt;
    p = child_polarity(*cur, i, p);
    cur = &cur->child(i);
  }
  return p;
}

Player owner(Formula::Kind choice_kind, Polarity polarity) {
  bool machine_type =
      choice_kind == Formula::Kind::ChOr || choice_kind == Formula::Kind::ChEx;
  if (polarity == Polarity::Negative) machine_type = !machine_type;
  return machine_type ? Player::Machine : Player::Environment;
}

std::vector<Path> surface_choice_paths(const Formula& f) {
  std::vector<Path> out;
  Path path;
  collect_surface(f, path, out);
  return out;
}

Formula elementarization(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::ChOr:
    case Formula::Kind::ChEx:
      return Formula::falsity();
    case Formula::Kind::ChAnd:
    case Formula::Kind::ChAll:
      return Formula::truth();
    case Formula::Kind::Eq:
    case Formula::Kind::Pred:
      return f;
    default:
      break;
  }
  if (is_elementary(f)) return f;
  if (f.kind() == Formula::Kind::Not)
    return Formula::negation(elementarization(f.child(0)));
  if (f.is_quantifier())
    return Formula::quantifier(f.kind(), f.var(), elementarization(f.body()));
  return Formula::binary(f.kind(), elementarization(f.child(0)),
                         elementarization(f.child(1)));
}

std::vector<Development> developments(const Formula& f, Player player,
                                      const std::string& y) {
  std::vector<Development> out;
  Path path;
  collect_developments(f, player, y, Polarity::Positive, path, out);
  return out;
}

std::optional<Illegality> check_move(const Formula& f, const Labmove& move) {
  const Formula* cur = &f;
  Polarity p = Polarity::Positive;
  for (auto i : move.path) {
    if (i >= cur->arity())
      return Illegality{"wrong-path", "path " + to_string(move.path) +
                                          " does not address an occurrence"};
    if (cur->is_choice())
      return Illegality{"non-surface", "occurrence " + to_string(move.path) +
                                           " lies inside a choice operator"};
    p = child_polarity(*cur, i, p);
    cur = &cur->child(i);
  }
  if (!cur->is_choice())
    return Illegality{"wrong-path", "occurrence " + to_string(move.path) +
                                        " is not a choice operator"};
  if (owner(cur->kind(), p) != move.player)
    return Illegality{"wrong-player", std::string("occurrence ") +
                                          to_string(move.path) +
                                          " belongs to the " +
                                          to_string(owner(cur->kind(), p))};
  bool wants_const = cur->is_quantifier();
  bool is_const = move.payload.kind == Payload::Kind::Const;
  if (wants_const != is_const)
    return Illegality{"wrong-payload",
                      wants_const ? "a choice quantifier needs a constant"
                                  : "a choice connective needs left or right"};
  return std::nullopt;
}

Formula apply_move(const Formula& f, const Labmove& move) {
  if (auto bad = check_move(f, move))
    throw LegalityError(bad->condition, bad->message);
  const Formula& target = subformula_at(f, move.path);
  Formula replacement =
      target.is_quantifier()
          ? substitute(target.body(), target.var(),
                       Term::numeral(move.payload.constant))
          : target.child(move.payload.kind == Payload::Kind::Left ? 0 : 1);
  return replace_at(f, move.path, replacement);
}

Formula yield(const Formula& f, const Run& run) {
  Formula current = f;
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (auto bad = check_move(current, run[i]))
      throw LegalityError(bad->condition, bad->message, i);
    current = apply_move(current, run[i]);
  }
  return current;
}

}  // namespace clarith
