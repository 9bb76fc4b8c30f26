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
#include <set>
#include <string>
#include <vector>

namespace clarith {

using Natural = std::uint64_t;

/// Arithmetic term over 0, successor, + and *.
///
/// Immutable and cheap to copy. The standard term "0 followed by n primes" is
/// always stored as Numeral(n): succ() folds into numerals, so Zero is simply
/// Numeral(0) and structural equality never distinguishes the two spellings.
class Term {
 public:
  enum class Kind : std::uint8_t { Numeral, Var, Succ, Plus, Times };

  static Term zero();
  static Term numeral(Natural n);
  static Term var(std::string name);
  static Term succ(Term t);
  static Term plus(Term lhs, Term rhs);
  static Term times(Term lhs, Term rhs);

  Kind kind() const;
  /// Valid for Numeral.
  Natural value() const;
  /// Valid for Var.
  const std::string& name() const;
  /// Operand i; Succ has one, Plus/Times have two.
  const Term& arg(std::size_t i) const;

  bool is_closed() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Built-in decidable predicates that stand in for arithmetised machine
/// relations. Both look machines up by code in machine_corpus().
enum class Predicate : std::uint8_t {
  Halts,   ///< H(m, n): machine m on input 0 halts within n steps.
  Turing,  ///< T(m, y, z, t): machine m on input y halts at step z with output t.
};

std::size_t predicate_arity(Predicate p);
const char* predicate_name(Predicate p);

/// Formula of the clarithmetic language: classical connectives and
/// quantifiers plus the choice operators && (⊓), vv (⊔), AAx (⊓x), EEx (⊔x).
class Formula {
 public:
  enum class Kind : std::uint8_t {
    Eq,
    Pred,
    Not,
    And,
    Or,
    Implies,
    ForAll,
    Exists,
    ChAnd,
    ChOr,
    ChAll,
    ChEx,
  };

  static Formula eq(Term lhs, Term rhs);
  static Formula pred(Predicate p, std::vector<Term> args);
  static Formula negation(Formula f);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  static Formula quantifier(Kind kind, std::string var, Formula body);

  static Formula conj(Formula a, Formula b) { return binary(Kind::And, a, b); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::Or, a, b); }
  static Formula implies(Formula a, Formula b) {
    return binary(Kind::Implies, a, b);
  }
  static Formula ch_and(Formula a, Formula b) {
    return binary(Kind::ChAnd, a, b);
  }
  static Formula ch_or(Formula a, Formula b) {
    return binary(Kind::ChOr, a, b);
  }
  static Formula forall(std::string x, Formula b) {
    return quantifier(Kind::ForAll, std::move(x), b);
  }
  static Formula exists(std::string x, Formula b) {
    return quantifier(Kind::Exists, std::move(x), b);
  }
  static Formula ch_all(std::string x, Formula b) {
    return quantifier(Kind::ChAll, std::move(x), b);
  }
  static Formula ch_ex(std::string x, Formula b) {
    return quantifier(Kind::ChEx, std::move(x), b);
  }

  /// 0 = 0
  static Formula truth();
  /// 0 = 0'
  static Formula falsity();

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Eq || kind() == Kind::Pred; }
  bool is_binary() const;
  bool is_quantifier() const;
  bool is_choice() const;

  /// Term operands of Eq (two) or Pred (arity).
  const std::vector<Term>& terms() const;
  Predicate predicate() const;
  /// Number of formula children: 0 for atoms, 1 for Not and quantifiers.
  std::size_t arity() const;
  const Formula& child(std::size_t i) const;
  /// Bound variable of a quantifier.
  const std::string& var() const;
  const Formula& body() const { return child(0); }

  /// Cheap identity test; equal pointers imply structural equality.
  bool same_node(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Variables, substitution and structural utilities.

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
/// Free variables in left-to-right order of first free occurrence.
std::vector<std::string> free_vars_ordered(const Formula& f);
/// Every variable name that occurs anywhere, bound or free.
std::set<std::string> all_vars(const Formula& f);

bool is_elementary(const Formula& f);
bool is_sentence(const Formula& f);

Term substitute(const Term& t, const std::string& x, const Term& replacement);
/// Capture-avoiding substitution of `replacement` for the free occurrences of
/// `x`. Throws CaptureError instead of renaming when a binder would capture a
/// free variable of `replacement`.
Formula substitute(const Formula& f, const std::string& x,
                   const Term& replacement);

/// Equality up to renaming of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);

/// ⊓-closure: prefixes AA quantifiers over free_vars_ordered(f), outermost
/// first.
Formula choice_closure(const Formula& f);

/// A variable name not in `avoid`, derived from `hint`.
std::string fresh_var(const std::set<std::string>& avoid,
                      const std::string& hint = "y");

std::size_t depth(const Formula& f);

}  // namespace clarith
