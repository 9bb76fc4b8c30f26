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

#include "clarith/truth.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clarith/error.hpp"
#include "clarith/machine.hpp"

namespace clarith {

Truth3 Truth3::operator!() const {
  switch (value_) {
    case Value::True: return no();
    case Value::False: return yes();
    default: return *this;
  }
}

const char* to_string(Truth3::Value v) {
  switch (v) {
    case Truth3::Value::True: return "true";
    case Truth3::Value::False: return "false";
    default: return "unknown";
  }
}

namespace {

struct Overflow {};

using Env = std::vector<std::pair<std::string, Natural>>;

Natural lookup(const Env& env, const std::string& name) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name) return it->second;
  throw Error("open formula: variable '" + name + "' is free");
}

Natural value_of(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Numeral:
      return t.value();
    case Term::Kind::Var:
      return lookup(env, t.name());
    case Term::Kind::Succ: {
      Natural v = value_of(t.arg(0), env);
      if (v == static_cast<Natural>(-1)) throw Overflow{};
      return v + 1;
    }
    case Term::Kind::Plus: {
      Natural a = value_of(t.arg(0), env), b = value_of(t.arg(1), env), r;
      if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
      return r;
    }
    case Term::Kind::Times: {
      Natural a = value_of(t.arg(0), env), b = value_of(t.arg(1), env), r;
      if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
      return r;
    }
  }
  return 0;
}

bool term_mentions(const Term& t, const std::string& x) {
  switch (t.kind()) {
    case Term::Kind::Numeral: return false;
    case Term::Kind::Var: return t.name() == x;
    case Term::Kind::Succ: return term_mentions(t.arg(0), x);
    default: return term_mentions(t.arg(0), x) || term_mentions(t.arg(1), x);
  }
}

// Whether the value of x can influence the truth of f. Occurrences inside an
// equation between identical terms do not count.
bool depends_on(const Formula& f, const std::string& x) {
  if (f.kind() == Formula::Kind::Eq) {
    if (f.terms()[0] == f.terms()[1]) return false;
    return term_mentions(f.terms()[0], x) || term_mentions(f.terms()[1], x);
  }
  if (f.kind() == Formula::Kind::Pred) {
    for (const auto& t : f.terms())
      if (term_mentions(t, x)) return true;
    return false;
  }
  if (f.is_quantifier() && f.var() == x) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (depends_on(f.child(i), x)) return true;
  return false;
}


// Polynomial normal form of a term: monomial (sorted variable names) to
// coefficient. Variables bound in the environment are folded into constants,
// names missing from it stay symbolic.
using Monomial = std::vector<std::string>;
using Poly = std::map<Monomial, Natural>;
using SymEnv = std::vector<std::pair<std::string, std::optional<Natural>>>;

bool add_into(Poly& acc, const Monomial& m, Natural c) {
  if (c == 0) return true;
  Natural& slot = acc[m];
  return !__builtin_add_overflow(slot, c, &slot);
}

std::optional<Poly> poly_of(const Term& t, const SymEnv& env) {
  switch (t.kind()) {
    case Term::Kind::Numeral: {
      Poly p;
      if (t.value() != 0) p[{}] = t.value();
      return p;
    }
    case Term::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first != t.name()) continue;
        Poly p;
        if (!it->second) p[{t.name()}] = 1;
        else if (*it->second != 0) p[{}] = *it->second;
        return p;
      }
      return Poly{{{t.name()}, 1}};
    }
    case Term::Kind::Succ: {
      auto p = poly_of(t.arg(0), env);
      if (!p || !add_into(*p, {}, 1)) return std::nullopt;
      return p;
    }
    case Term::Kind::Plus: {
      auto a = poly_of(t.arg(0), env), b = poly_of(t.arg(1), env);
      if (!a || !b) return std::nullopt;
      for (const auto& [m, c] : *b)
        if (!add_into(*a, m, c)) return std::nullopt;
      return a;
    }
    case Term::Kind::Times: {
      auto a = poly_of(t.arg(0), env), b = poly_of(t.arg(1), env);
      if (!a || !b) return std::nullopt;
      Poly out;
      for (const auto& [ma, ca] : *a) {
        for (const auto& [mb, cb] : *b) {
          Monomial m = ma;
          m.insert(m.end(), mb.begin(), mb.end());
          std::sort(m.begin(), m.end());
          Natural c;
          if (__builtin_mul_overflow(ca, cb, &c) || !add_into(out, m, c))
            return std::nullopt;
        }
      }
      return out;
    }
  }
  return std::nullopt;
}

// An equation with common monomials cancelled, sides ordered.
using EqKey = std::pair<Poly, Poly>;

std::optional<EqKey> equation_key(const Formula& eq, const SymEnv& env) {
  auto a = poly_of(eq.terms()[0], env), b = poly_of(eq.terms()[1], env);
  if (!a || !b) return std::nullopt;
  for (auto it = a->begin(); it != a->end();) {
    auto jt = b->find(it->first);
    if (jt == b->end()) {
      ++it;
      continue;
    }
    Natural common = std::min(it->second, jt->second);
    it->second -= common;
    jt->second -= common;
    if (jt->second == 0) b->erase(jt);
    it = it->second == 0 ? a->erase(it) : std::next(it);
  }
  if (*b < *a) std::swap(*a, *b);
  return EqKey{*a, *b};
}

bool identically_false(const Formula& f, SymEnv& env);

// Sound, bound-free recognition of formulas true under every assignment to
// the symbolic variables.
bool identically_true(const Formula& f, SymEnv& env) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      auto k = equation_key(f, env);
      return k && k->first.empty() && k->second.empty();
    }
    case Formula::Kind::Not:
      return identically_false(f.child(0), env);
    case Formula::Kind::And:
      return identically_true(f.child(0), env) &&
             identically_true(f.child(1), env);
    case Formula::Kind::Or:
      return identically_true(f.child(0), env) ||
             identically_true(f.child(1), env);
    case Formula::Kind::Implies: {
      if (identically_false(f.child(0), env) ||
          identically_true(f.child(1), env))
        return true;
      if (f.child(0).kind() != Formula::Kind::Eq ||
          f.child(1).kind() != Formula::Kind::Eq)
        return false;
      auto a = equation_key(f.child(0), env), b = equation_key(f.child(1), env);
      return a && b && *a == *b;
    }
    case Formula::Kind::ForAll: {
      env.emplace_back(f.var(), std::nullopt);
      bool r = identically_true(f.body(), env);
      env.pop_back();
      return r;
    }
    default:
      return false;
  }
}

bool identically_false(const Formula& f, SymEnv& env) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      // Coefficients are natural, so 0 = p never holds when p has a positive
      // constant term.
      auto k = equation_key(f, env);
      if (!k) return false;
      const Poly& lo = k->first.empty() ? k->first : k->second;
      const Poly& hi = k->first.empty() ? k->second : k->first;
      return lo.empty() && hi.count({}) > 0;
    }
    case Formula::Kind::Not:
      return identically_true(f.child(0), env);
    case Formula::Kind::And:
      return identically_false(f.child(0), env) ||
             identically_false(f.child(1), env);
    case Formula::Kind::Or:
      return identically_false(f.child(0), env) &&
             identically_false(f.child(1), env);
    case Formula::Kind::Implies:
      return identically_true(f.child(0), env) &&
             identically_false(f.child(1), env);
    default:
      return false;
  }
}

// F(0) & Ax(F(x) -> F(x')) -> Ax F(x), an instance of the induction schema.
bool is_induction_instance(const Formula& f) {
  if (f.kind() != Formula::Kind::Implies) return false;
  const Formula& premise = f.child(0);
  const Formula& conclusion = f.child(1);
  if (premise.kind() != Formula::Kind::And ||
      conclusion.kind() != Formula::Kind::ForAll)
    return false;
  const Formula& step = premise.child(1);
  if (step.kind() != Formula::Kind::ForAll ||
      step.body().kind() != Formula::Kind::Implies)
    return false;
  const std::string& x = step.var();
  const Formula& hyp = step.body().child(0);
  try {
    return alpha_equal(Formula::forall(x, hyp), conclusion) &&
           alpha_equal(substitute(hyp, x, Term::zero()), premise.child(0)) &&
           alpha_equal(substitute(hyp, x, Term::succ(Term::var(x))),
                       step.body().child(1));
  } catch (const CaptureError&) {
    return false;
  }
}

class Evaluator {
 public:
  Evaluator(Natural bound, const EvalOptions& options)
      : bound_(bound), options_(options) {}

  Truth3 eval(const Formula& f, Env& env) {
    switch (f.kind()) {
      case Formula::Kind::Eq:
        if (f.terms()[0] == f.terms()[1]) return Truth3::yes();
        try {
          return Truth3::of(value_of(f.terms()[0], env) ==
                            value_of(f.terms()[1], env));
        } catch (const Overflow&) {
          return Truth3::unknown("arithmetic overflow");
        }
      case Formula::Kind::Pred:
        try {
          return eval_predicate(f, env);
        } catch (const Overflow&) {
          return Truth3::unknown("arithmetic overflow");
        }
      case Formula::Kind::Not:
        return !eval(f.child(0), env);
      case Formula::Kind::And: {
        Truth3 a = eval(f.child(0), env);
        if (a.is_false()) return a;
        Truth3 b = eval(f.child(1), env);
        if (b.is_false()) return b;
        return a.is_unknown() ? a : b;
      }
      case Formula::Kind::Or: {
        Truth3 a = eval(f.child(0), env);
        if (a.is_true()) return a;
        Truth3 b = eval(f.child(1), env);
        if (b.is_true()) return b;
        return a.is_unknown() ? a : b;
      }
      case Formula::Kind::Implies: {
        if (options_.exact_shapes && is_induction_instance(f))
          return Truth3::yes();
        Truth3 a = !eval(f.child(0), env);
        if (a.is_true()) return a;
        Truth3 b = eval(f.child(1), env);
        if (b.is_true()) return b;
        return a.is_unknown() ? a : b;
      }
      case Formula::Kind::ForAll:
      case Formula::Kind::Exists:
        return eval_quantifier(f, env);
      default:
        throw Error("eval_elementary: formula is not elementary");
    }
  }

 private:
  Truth3 eval_predicate(const Formula& f, Env& env) {
    std::vector<Natural> args;
    for (const auto& t : f.terms()) args.push_back(value_of(t, env));
    if (f.predicate() == Predicate::Halts) return Truth3::of(halts_within(args[0], 0, args[1]));
    return Truth3::of(turing_T(machine_by_code(args[0]), args[1], args[2], args[3]));
  }

  // Values of x singled out by a guard built from x = t and disjunctions.
  std::optional<std::vector<Natural>> guard_values(const Formula& g,
                                                   const std::string& x,
                                                   Env& env) {
    if (g.kind() == Formula::Kind::Eq) {
      for (int side = 0; side < 2; ++side) {
        const Term& v = g.terms()[side];
        const Term& t = g.terms()[1 - side];
        if (v.kind() == Term::Kind::Var && v.name() == x && !term_mentions(t, x)) {
          try {
            return std::vector<Natural>{value_of(t, env)};
          } catch (const Overflow&) {
            return std::nullopt;
          }
        }
      }
      return std::nullopt;
    }
    if (g.kind() == Formula::Kind::Or) {
      auto a = guard_values(g.child(0), x, env);
      auto b = guard_values(g.child(1), x, env);
      if (!a || !b) return std::nullopt;
      a->insert(a->end(), b->begin(), b->end());
      return a;
    }
    return std::nullopt;
  }

  Truth3 over_values(const Formula& body, const std::string& x,
                     const std::vector<Natural>& values, bool universal,
                     Env& env) {
    bool unknown = false;
    std::string reason;
    for (Natural v : values) {
      env.emplace_back(x, v);
      Truth3 r = eval(body, env);
      env.pop_back();
      if (universal ? r.is_false() : r.is_true()) return r;
      if (r.is_unknown() && !unknown) {
        unknown = true;
        reason = r.reason();
      }
    }
    if (unknown) return Truth3::unknown(reason);
    return Truth3::of(universal);
  }

  std::optional<Truth3> exact_shape(const Formula& f, Env& env) {
    const bool universal = f.kind() == Formula::Kind::ForAll;
    const std::string& x = f.var();
    const Formula& body = f.body();
    if (!depends_on(body, x)) return over_values(body, x, {0}, universal, env);
    {
      // The domain is never empty, so a body true (false) for every x settles
      // both quantifiers.
      SymEnv sym(env.begin(), env.end());
      sym.emplace_back(x, std::nullopt);
      if (identically_true(body, sym)) return Truth3::yes();
      if (identically_false(body, sym)) return Truth3::no();
    }
    if (!universal) {
      if (guard_values(body, x, env)) return Truth3::yes();
      if (body.kind() == Formula::Kind::And) {
        for (int side = 0; side < 2; ++side)
          if (auto vals = guard_values(body.child(side), x, env))
            return over_values(body.child(1 - side), x, *vals, false, env);
      }
      return std::nullopt;
    }
    if (body.kind() == Formula::Kind::Implies) {
      if (auto vals = guard_values(body.child(0), x, env))
        return over_values(body.child(1), x, *vals, true, env);
    }
    if (body.kind() == Formula::Kind::Or) {
      for (int side = 0; side < 2; ++side) {
        const Formula& g = body.child(side);
        if (g.kind() != Formula::Kind::Not) continue;
        if (auto vals = guard_values(g.child(0), x, env))
          return over_values(body.child(1 - side), x, *vals, true, env);
      }
    }
    return std::nullopt;
  }

  Truth3 eval_quantifier(const Formula& f, Env& env) {
    if (options_.exact_shapes)
      if (auto exact = exact_shape(f, env)) return *exact;
    const bool universal = f.kind() == Formula::Kind::ForAll;
    bool inner_unknown = false;
    std::string reason;
    for (Natural v = 0; v <= bound_; ++v) {
      env.emplace_back(f.var(), v);
      Truth3 r = eval(f.body(), env);
      env.pop_back();
      if (universal ? r.is_false() : r.is_true()) return r;
      if (r.is_unknown() && !inner_unknown) {
        inner_unknown = true;
        reason = r.reason();
      }
    }
    if (inner_unknown) return Truth3::unknown(reason);
    return Truth3::unknown(std::string(universal ? "A" : "E") + f.var() +
                           " not settled by values 0.." +
                           std::to_string(bound_));
  }

  Natural bound_;
  EvalOptions options_;
};

}  // namespace

std::optional<Natural> term_value(const Term& t) {
  Env env;
  try {
    return value_of(t, env);
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

Truth3 eval_elementary(const Formula& f, Natural bound,
                       const EvalOptions& options) {
  if (!is_elementary(f)) throw Error("eval_elementary: formula is not elementary");
  if (auto fv = free_vars(f); !fv.empty())
    throw Error("open formula: variable '" + *fv.begin() + "' is free");
  Env env;
  return Evaluator(bound, options).eval(f, env);
}

}  // namespace clarith
