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

#include "clarith/formula.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "clarith/error.hpp"

namespace clarith {

struct Term::Node {
  Kind kind;
  Natural value = 0;
  std::string name;
  std::vector<Term> args;
  bool closed = true;
};

Term Term::zero() { return numeral(0); }

Term Term::numeral(Natural n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Numeral;
  node->value = n;
  return Term(std::move(node));
}

Term Term::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  node->closed = false;
  return Term(std::move(node));
}

Term Term::succ(Term t) {
  if (t.kind() == Kind::Numeral) return numeral(t.value() + 1);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Succ;
  node->closed = t.is_closed();
  node->args.push_back(std::move(t));
  return Term(std::move(node));
}

Term Term::plus(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Plus;
  node->closed = lhs.is_closed() && rhs.is_closed();
  node->args = {std::move(lhs), std::move(rhs)};
  return Term(std::move(node));
}

Term Term::times(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Times;
  node->closed = lhs.is_closed() && rhs.is_closed();
  node->args = {std::move(lhs), std::move(rhs)};
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }
Natural Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::arg(std::size_t i) const { return node_->args.at(i); }
bool Term::is_closed() const { return node_->closed; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Numeral:
      return a.value() == b.value();
    case Term::Kind::Var:
      return a.name() == b.name();
    default:
      return a.node_->args == b.node_->args;
  }
}

std::size_t predicate_arity(Predicate p) {
  return p == Predicate::Halts ? 2 : 4;
}

const char* predicate_name(Predicate p) {
  return p == Predicate::Halts ? "H" : "T";
}

struct Formula::Node {
  Kind kind;
  std::vector<Term> terms;
  Predicate predicate = Predicate::Halts;
  std::vector<Formula> children;
  std::string var;
};

Formula Formula::eq(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Eq;
  node->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::pred(Predicate p, std::vector<Term> args) {
  if (args.size() != predicate_arity(p))
    throw std::invalid_argument(std::string("predicate ") + predicate_name(p) +
                                " expects " +
                                std::to_string(predicate_arity(p)) +
                                " arguments");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pred;
  node->predicate = p;
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->children.push_back(std::move(f));
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children = {std::move(lhs), std::move(rhs)};
  Formula f(std::move(node));
  if (!f.is_binary()) throw std::invalid_argument("not a binary connective");
  return f;
}

Formula Formula::quantifier(Kind kind, std::string var, Formula body) {
  if (var.empty()) throw std::invalid_argument("empty variable name");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->var = std::move(var);
  node->children.push_back(std::move(body));
  Formula f(std::move(node));
  if (!f.is_quantifier()) throw std::invalid_argument("not a quantifier");
  return f;
}

Formula Formula::truth() {
  static const Formula t = eq(Term::zero(), Term::zero());
  return t;
}

Formula Formula::falsity() {
  static const Formula f = eq(Term::zero(), Term::numeral(1));
  return f;
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::ChAnd:
    case Kind::ChOr:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const {
  switch (kind()) {
    case Kind::ForAll:
    case Kind::Exists:
    case Kind::ChAll:
    case Kind::ChEx:
      return true;
    default:
      return false;
  }
}

bool Formula::is_choice() const {
  switch (kind()) {
    case Kind::ChAnd:
    case Kind::ChOr:
    case Kind::ChAll:
    case Kind::ChEx:
      return true;
    default:
      return false;
  }
}

const std::vector<Term>& Formula::terms() const { return node_->terms; }
Predicate Formula::predicate() const { return node_->predicate; }
std::size_t Formula::arity() const { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const {
  return node_->children.at(i);
}
const std::string& Formula::var() const { return node_->var; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Pred && a.predicate() != b.predicate())
    return false;
  return a.node_->var == b.node_->var && a.node_->terms == b.node_->terms &&
         a.node_->children == b.node_->children;
}

namespace {

void collect_term_vars(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Numeral:
      return;
    case Term::Kind::Var:
      out.push_back(t.name());
      return;
    case Term::Kind::Succ:
      collect_term_vars(t.arg(0), out);
      return;
    default:
      collect_term_vars(t.arg(0), out);
      collect_term_vars(t.arg(1), out);
  }
}

// Appends free occurrences in textual order; `bound` is the binder stack.
void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  if (f.is_atom()) {
    std::vector<std::string> vars;
    for (const auto& t : f.terms()) collect_term_vars(t, vars);
    for (auto& v : vars)
      if (std::find(bound.begin(), bound.end(), v) == bound.end())
        out.push_back(std::move(v));
    return;
  }
  if (f.is_quantifier()) {
    bound.push_back(f.var());
    collect_free(f.body(), bound, out);
    bound.pop_back();
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_free(f.child(i), bound, out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::vector<std::string> vars;
  collect_term_vars(t, vars);
  return {vars.begin(), vars.end()};
}

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound, out;
  collect_free(f, bound, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> free_vars_ordered(const Formula& f) {
  std::vector<std::string> bound, out, unique;
  collect_free(f, bound, out);
  for (auto& v : out)
    if (std::find(unique.begin(), unique.end(), v) == unique.end())
      unique.push_back(std::move(v));
  return unique;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> result;
  if (f.is_atom()) {
    for (const auto& t : f.terms()) {
      auto vs = free_vars(t);
      result.insert(vs.begin(), vs.end());
    }
    return result;
  }
  if (f.is_quantifier()) result.insert(f.var());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    auto vs = all_vars(f.child(i));
    result.insert(vs.begin(), vs.end());
  }
  return result;
}

bool is_elementary(const Formula& f) {
  if (f.is_choice()) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!is_elementary(f.child(i))) return false;
  return true;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

Term substitute(const Term& t, const std::string& x, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Numeral:
      return t;
    case Term::Kind::Var:
      return t.name() == x ? replacement : t;
    case Term::Kind::Succ:
      return Term::succ(substitute(t.arg(0), x, replacement));
    case Term::Kind::Plus:
      return Term::plus(substitute(t.arg(0), x, replacement),
                        substitute(t.arg(1), x, replacement));
    case Term::Kind::Times:
      return Term::times(substitute(t.arg(0), x, replacement),
                         substitute(t.arg(1), x, replacement));
  }
  return t;
}

namespace {

Formula substitute_impl(const Formula& f, const std::string& x,
                        const Term& replacement,
                        const std::set<std::string>& replacement_vars) {
  if (f.is_atom()) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) terms.push_back(substitute(t, x, replacement));
    if (f.kind() == Formula::Kind::Eq) return Formula::eq(terms[0], terms[1]);
    return Formula::pred(f.predicate(), std::move(terms));
  }
  if (f.is_quantifier()) {
    if (f.var() == x) return f;
    if (replacement_vars.count(f.var()) && free_vars(f.body()).count(x))
      throw CaptureError("substituting for '" + x + "' would capture '" +
                         f.var() + "'");
    return Formula::quantifier(
        f.kind(), f.var(),
        substitute_impl(f.body(), x, replacement, replacement_vars));
  }
  if (f.kind() == Formula::Kind::Not)
    return Formula::negation(
        substitute_impl(f.child(0), x, replacement, replacement_vars));
  return Formula::binary(
      f.kind(), substitute_impl(f.child(0), x, replacement, replacement_vars),
      substitute_impl(f.child(1), x, replacement, replacement_vars));
}

}  // namespace

Formula substitute(const Formula& f, const std::string& x,
                   const Term& replacement) {
  if (replacement.kind() == Term::Kind::Var && replacement.name() == x) return f;
  return substitute_impl(f, x, replacement, free_vars(replacement));
}

namespace {

using Renaming = std::vector<std::pair<std::string, std::string>>;

// Binder depth index of v in env (innermost first), or -1 if free.
int binder_index(const std::vector<std::string>& env, const std::string& v) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[static_cast<std::size_t>(i)] == v)
      return static_cast<int>(env.size()) - 1 - i;
  return -1;
}

bool alpha_term(const Term& a, const Term& b, const std::vector<std::string>& ea,
                const std::vector<std::string>& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Numeral:
      return a.value() == b.value();
    case Term::Kind::Var: {
      int ia = binder_index(ea, a.name());
      int ib = binder_index(eb, b.name());
      if (ia != ib) return false;
      return ia >= 0 || a.name() == b.name();
    }
    case Term::Kind::Succ:
      return alpha_term(a.arg(0), b.arg(0), ea, eb);
    default:
      return alpha_term(a.arg(0), b.arg(0), ea, eb) &&
             alpha_term(a.arg(1), b.arg(1), ea, eb);
  }
}

bool alpha_impl(const Formula& a, const Formula& b, std::vector<std::string>& ea,
                std::vector<std::string>& eb) {
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) {
    if (a.kind() == Formula::Kind::Pred && a.predicate() != b.predicate())
      return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i)
      if (!alpha_term(a.terms()[i], b.terms()[i], ea, eb)) return false;
    return true;
  }
  if (a.is_quantifier()) {
    ea.push_back(a.var());
    eb.push_back(b.var());
    bool ok = alpha_impl(a.body(), b.body(), ea, eb);
    ea.pop_back();
    eb.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!alpha_impl(a.child(i), b.child(i), ea, eb)) return false;
  return true;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  std::vector<std::string> ea, eb;
  return alpha_impl(a, b, ea, eb);
}

Formula choice_closure(const Formula& f) {
  auto vars = free_vars_ordered(f);
  Formula result = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    result = Formula::ch_all(*it, result);
  return result;
}

std::string fresh_var(const std::set<std::string>& avoid,
                      const std::string& hint) {
  if (!avoid.count(hint)) return hint;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = hint + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, depth(f.child(i)));
  return f.is_atom() ? 0 : d + 1;
}

}  // namespace clarith
