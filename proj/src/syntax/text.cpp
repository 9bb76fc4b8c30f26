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

#include "clarith/text.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "clarith/error.hpp"

namespace clarith {
namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Dot,
  Comma,
  Equals,
  Prime,
  Plus,
  Star,
  Tilde,
  Arrow,
  Amp,
  AmpAmp,
  Vee,
  VeeVee,
  Quant,
  Pred,
  Ident,
  Number,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t pos) {
    out.push_back({k, std::move(text), pos});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': push(Tok::LParen, "(", i++); continue;
      case ')': push(Tok::RParen, ")", i++); continue;
      case '.': push(Tok::Dot, ".", i++); continue;
      case ',': push(Tok::Comma, ",", i++); continue;
      case '=': push(Tok::Equals, "=", i++); continue;
      case '\'': push(Tok::Prime, "'", i++); continue;
      case '+': push(Tok::Plus, "+", i++); continue;
      case '*': push(Tok::Star, "*", i++); continue;
      case '~': push(Tok::Tilde, "~", i++); continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          push(Tok::Arrow, "->", i);
          i += 2;
          continue;
        }
        throw SyntaxError("expected '->'", i);
      case '&':
        if (i + 1 < s.size() && s[i + 1] == '&') {
          push(Tok::AmpAmp, "&&", i);
          i += 2;
        } else {
          push(Tok::Amp, "&", i++);
        }
        continue;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      push(Tok::Number, std::string(s.substr(start, i - start)), start);
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isupper(static_cast<unsigned char>(s[i]))) ++i;
      std::string word(s.substr(start, i - start));
      if (word == "AA" || word == "EE" || word == "A" || word == "E")
        push(Tok::Quant, word, start);
      else if (word == "H" || word == "T")
        push(Tok::Pred, word, start);
      else
        throw SyntaxError("unknown keyword '" + word + "'", start);
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                              std::isdigit(static_cast<unsigned char>(s[i])) ||
                              s[i] == '_'))
        ++i;
      std::string word(s.substr(start, i - start));
      if (word == "v")
        push(Tok::Vee, word, start);
      else if (word == "vv")
        push(Tok::VeeVee, word, start);
      else
        push(Tok::Ident, word, start);
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula formula() {
    if (peek().kind == Tok::Quant) return quantified();
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(lhs, formula());
    return lhs;
  }

  Term term() {
    Term t = product();
    while (accept(Tok::Plus)) t = Term::plus(t, product());
    return t;
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw SyntaxError(std::string("expected ") + what +
                            (peek().kind == Tok::End
                                 ? std::string(", found end of input")
                                 : ", found '" + peek().text + "'"),
                        peek().pos);
    return toks_[pos_++];
  }

  Formula quantified() {
    const Token& q = expect(Tok::Quant, "quantifier");
    std::string var = expect(Tok::Ident, "variable after quantifier").text;
    expect(Tok::Dot, "'.' after quantified variable");
    Formula body = formula();
    Formula::Kind k = q.text == "AA"   ? Formula::Kind::ChAll
                      : q.text == "EE" ? Formula::Kind::ChEx
                      : q.text == "A"  ? Formula::Kind::ForAll
                                       : Formula::Kind::Exists;
    return Formula::quantifier(k, var, body);
  }

  Formula disjunction() {
    Formula f = conjunction();
    for (;;) {
      if (accept(Tok::Vee))
        f = Formula::disj(f, conjunction());
      else if (accept(Tok::VeeVee))
        f = Formula::ch_or(f, conjunction());
      else
        return f;
    }
  }

  Formula conjunction() {
    Formula f = unary();
    for (;;) {
      if (accept(Tok::Amp))
        f = Formula::conj(f, unary());
      else if (accept(Tok::AmpAmp))
        f = Formula::ch_and(f, unary());
      else
        return f;
    }
  }

  Formula unary() {
    if (accept(Tok::Tilde)) return Formula::negation(unary());
    if (peek().kind == Tok::Quant) return quantified();
    if (peek().kind == Tok::Pred) return predicate();
    if (peek().kind == Tok::LParen) {
      // Either a parenthesised formula or an atom whose left term starts with
      // a parenthesis; try the atom reading first.
      std::size_t saved = pos_;
      try {
        return equation();
      } catch (const SyntaxError&) {
        pos_ = saved;
      }
      expect(Tok::LParen, "'('");
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return equation();
  }

  Formula predicate() {
    const Token& name = expect(Tok::Pred, "predicate");
    Predicate p = name.text == "H" ? Predicate::Halts : Predicate::Turing;
    expect(Tok::LParen, "'(' after predicate");
    std::vector<Term> args{term()};
    while (accept(Tok::Comma)) args.push_back(term());
    expect(Tok::RParen, "')' after predicate arguments");
    if (args.size() != predicate_arity(p))
      throw SyntaxError(std::string("predicate ") + predicate_name(p) +
                            " takes " + std::to_string(predicate_arity(p)) +
                            " arguments, got " + std::to_string(args.size()),
                        name.pos);
    return Formula::pred(p, std::move(args));
  }

  Formula equation() {
    Term lhs = term();
    expect(Tok::Equals, "'='");
    return Formula::eq(lhs, term());
  }

  Term product() {
    Term t = postfix();
    while (accept(Tok::Star)) t = Term::times(t, postfix());
    return t;
  }

  Term postfix() {
    Term t = primary();
    while (accept(Tok::Prime)) t = Term::succ(t);
    return t;
  }

  Term primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        ++pos_;
        Natural n = 0;
        for (char c : tok.text) {
          Natural digit = static_cast<Natural>(c - '0');
          if (n > (std::numeric_limits<Natural>::max() - digit) / 10)
            throw SyntaxError("numeral out of range", tok.pos);
          n = n * 10 + digit;
        }
        return Term::numeral(n);
      }
      case Tok::Ident:
        ++pos_;
        return Term::var(tok.text);
      case Tok::LParen: {
        ++pos_;
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::End:
        throw SyntaxError("expected term, found end of input", tok.pos);
      default:
        throw SyntaxError("expected term, found '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_compound_term(const Term& t) {
  return t.kind() == Term::Kind::Plus || t.kind() == Term::Kind::Times;
}

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Numeral:
      out += '0';
      out.append(t.value(), '\'');
      return;
    case Term::Kind::Var:
      out += t.name();
      return;
    case Term::Kind::Succ:
      if (is_compound_term(t.arg(0))) {
        out += '(';
        print_term(t.arg(0), out);
        out += ')';
      } else {
        print_term(t.arg(0), out);
      }
      out += '\'';
      return;
    case Term::Kind::Plus:
    case Term::Kind::Times:
      for (std::size_t i = 0; i < 2; ++i) {
        if (i == 1) out += t.kind() == Term::Kind::Plus ? " + " : " * ";
        if (is_compound_term(t.arg(i))) {
          out += '(';
          print_term(t.arg(i), out);
          out += ')';
        } else {
          print_term(t.arg(i), out);
        }
      }
      return;
  }
}

const char* binary_symbol(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Or: return " v ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::ChAnd: return " && ";
    default: return " vv ";
  }
}

const char* quantifier_symbol(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::ForAll: return "A";
    case Formula::Kind::Exists: return "E";
    case Formula::Kind::ChAll: return "AA";
    default: return "EE";
  }
}

void print_formula(const Formula& f, std::string& out);

void print_parenthesized(const Formula& f, std::string& out) {
  out += '(';
  print_formula(f, out);
  out += ')';
}

void print_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      print_term(f.terms()[0], out);
      out += " = ";
      print_term(f.terms()[1], out);
      return;
    case Formula::Kind::Pred:
      out += predicate_name(f.predicate());
      out += '(';
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ", ";
        print_term(f.terms()[i], out);
      }
      out += ')';
      return;
    case Formula::Kind::Not:
      out += '~';
      print_parenthesized(f.child(0), out);
      return;
    default:
      break;
  }
  if (f.is_binary()) {
    print_parenthesized(f.child(0), out);
    out += binary_symbol(f.kind());
    print_parenthesized(f.child(1), out);
    return;
  }
  out += quantifier_symbol(f.kind());
  out += f.var();
  out += ". ";
  const Formula& body = f.body();
  if (body.is_atom() || body.is_quantifier() || body.kind() == Formula::Kind::Not)
    print_formula(body, out);
  else
    print_parenthesized(body, out);
}

}  // namespace

Formula parse_formula(std::string_view text, bool require_sentence) {
  Parser p(lex(text));
  Formula f = p.formula();
  p.expect_end();
  if (require_sentence) {
    auto fv = free_vars(f);
    if (!fv.empty())
      throw SyntaxError("unbound variable '" + *fv.begin() + "'", 0);
  }
  return f;
}

Term parse_term(std::string_view text) {
  Parser p(lex(text));
  Term t = p.term();
  p.expect_end();
  return t;
}

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

}  // namespace clarith
