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

#include "clarith/serialize.hpp"

#include "clarith/error.hpp"
#include "clarith/text.hpp"

namespace clarith {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& children(const Json& j, std::size_t n) {
  const Json& c = field(j, "children");
  if (!c.is_array() || c.size() != n)
    throw FormatError("expected " + std::to_string(n) + " children");
  return c;
}

struct KindName {
  Formula::Kind kind;
  const char* tag;
};

constexpr KindName kFormulaTags[] = {
    {Formula::Kind::Eq, "eq"},          {Formula::Kind::Pred, "pred"},
    {Formula::Kind::Not, "not"},        {Formula::Kind::And, "and"},
    {Formula::Kind::Or, "or"},          {Formula::Kind::Implies, "implies"},
    {Formula::Kind::ForAll, "forall"},  {Formula::Kind::Exists, "exists"},
    {Formula::Kind::ChAnd, "chand"},    {Formula::Kind::ChOr, "chor"},
    {Formula::Kind::ChAll, "chall"},    {Formula::Kind::ChEx, "chex"},
};

const char* tag_of(Formula::Kind k) {
  for (const auto& e : kFormulaTags)
    if (e.kind == k) return e.tag;
  return "?";
}

}  // namespace

Json to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Numeral:
      return {{"tag", "num"}, {"value", t.value()}};
    case Term::Kind::Var:
      return {{"tag", "var"}, {"name", t.name()}};
    case Term::Kind::Succ:
      return {{"tag", "succ"}, {"children", Json::array({to_json(t.arg(0))})}};
    case Term::Kind::Plus:
    case Term::Kind::Times:
      return {{"tag", t.kind() == Term::Kind::Plus ? "plus" : "times"},
              {"children", Json::array({to_json(t.arg(0)), to_json(t.arg(1))})}};
  }
  return nullptr;
}

Term term_from_json(const Json& j) {
  if (j.is_string()) return parse_term(j.get<std::string>());
  if (j.is_number_unsigned()) return Term::numeral(j.get<Natural>());
  const std::string tag = field(j, "tag").get<std::string>();
  if (tag == "num") return Term::numeral(field(j, "value").get<Natural>());
  if (tag == "var") return Term::var(field(j, "name").get<std::string>());
  if (tag == "succ") return Term::succ(term_from_json(children(j, 1)[0]));
  if (tag == "plus" || tag == "times") {
    const Json& c = children(j, 2);
    Term a = term_from_json(c[0]), b = term_from_json(c[1]);
    return tag == "plus" ? Term::plus(a, b) : Term::times(a, b);
  }
  throw FormatError("unknown term tag '" + tag + "'");
}

Json to_json(const Formula& f) {
  Json j = {{"tag", tag_of(f.kind())}};
  if (f.is_atom()) {
    if (f.kind() == Formula::Kind::Pred) j["name"] = predicate_name(f.predicate());
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(to_json(t));
    j["terms"] = std::move(terms);
    return j;
  }
  if (f.is_quantifier()) j["var"] = f.var();
  Json kids = Json::array();
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(to_json(f.child(i)));
  j["children"] = std::move(kids);
  return j;
}

Formula formula_from_json(const Json& j) {
  if (j.is_string()) return parse_formula(j.get<std::string>());
  const std::string tag = field(j, "tag").get<std::string>();
  const KindName* entry = nullptr;
  for (const auto& e : kFormulaTags)
    if (tag == e.tag) entry = &e;
  if (!entry) throw FormatError("unknown formula tag '" + tag + "'");
  switch (entry->kind) {
    case Formula::Kind::Eq: {
      const Json& t = field(j, "terms");
      if (!t.is_array() || t.size() != 2) throw FormatError("eq needs two terms");
      return Formula::eq(term_from_json(t[0]), term_from_json(t[1]));
    }
    case Formula::Kind::Pred: {
      const std::string name = field(j, "name").get<std::string>();
      if (name != "H" && name != "T")
        throw FormatError("unknown predicate '" + name + "'");
      Predicate p = name == "H" ? Predicate::Halts : Predicate::Turing;
      std::vector<Term> args;
      for (const auto& t : field(j, "terms")) args.push_back(term_from_json(t));
      if (args.size() != predicate_arity(p))
        throw FormatError("wrong arity for predicate '" + name + "'");
      return Formula::pred(p, std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(formula_from_json(children(j, 1)[0]));
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
    case Formula::Kind::ChAll:
    case Formula::Kind::ChEx:
      return Formula::quantifier(entry->kind, field(j, "var").get<std::string>(),
                                 formula_from_json(children(j, 1)[0]));
    default: {
      const Json& c = children(j, 2);
      return Formula::binary(entry->kind, formula_from_json(c[0]),
                             formula_from_json(c[1]));
    }
  }
}

Json to_json(const Path& p) {
  Json j = Json::array();
  for (auto i : p) j.push_back(i);
  return j;
}

Path path_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("path must be an array of indices");
  Path p;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw FormatError("path index must be a natural");
    p.push_back(e.get<std::uint32_t>());
  }
  return p;
}

Json to_json(Player p) { return to_string(p); }

Player player_from_json(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "machine") return Player::Machine;
  if (s == "environment") return Player::Environment;
  throw FormatError("unknown player '" + s + "'");
}

Json to_json(const Payload& p) {
  switch (p.kind) {
    case Payload::Kind::Left: return "left";
    case Payload::Kind::Right: return "right";
    case Payload::Kind::Const: return {{"const", p.constant}};
  }
  return nullptr;
}

Payload payload_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "left") return Payload::left();
    if (s == "right") return Payload::right();
    throw FormatError("unknown payload '" + s + "'");
  }
  const Json& c = field(j, "const");
  if (!c.is_number_unsigned()) throw FormatError("constant must be a natural");
  return Payload::constant_of(c.get<Natural>());
}

Json to_json(const Labmove& m) {
  return {{"player", to_json(m.player)},
          {"path", to_json(m.path)},
          {"payload", to_json(m.payload)}};
}

Labmove labmove_from_json(const Json& j) {
  return {player_from_json(field(j, "player")), path_from_json(field(j, "path")),
          payload_from_json(field(j, "payload"))};
}

Json to_json(const Run& run) {
  Json j = Json::array();
  for (const auto& m : run) j.push_back(to_json(m));
  return j;
}

Run run_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("run must be an array of labmoves");
  Run run;
  for (const auto& m : j) run.push_back(labmove_from_json(m));
  return run;
}

Json to_json(const MoveTemplate& m) {
  Json payload = m.kind == Payload::Kind::Left    ? Json("left")
                 : m.kind == Payload::Kind::Right ? Json("right")
                                                  : Json("const");
  return {{"player", to_json(m.player)},
          {"path", to_json(m.path)},
          {"payload", std::move(payload)}};
}

}  // namespace clarith
