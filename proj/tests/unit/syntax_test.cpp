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

#include <gtest/gtest.h>

#include "clarith/error.hpp"
#include "clarith/occurrence.hpp"
#include "clarith/serialize.hpp"
#include "clarith/text.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "printers.hpp"

namespace clarith {
namespace {

using testing::Gen;

Formula P(const char* s) { return parse_formula(s); }

TEST(Parse, AxiomEightStructure) {
  Formula f = P("AAx. EEy. y = x'");
  ASSERT_EQ(f.kind(), Formula::Kind::ChAll);
  EXPECT_EQ(f.var(), "x");
  const Formula& g = f.body();
  ASSERT_EQ(g.kind(), Formula::Kind::ChEx);
  EXPECT_EQ(g.var(), "y");
  EXPECT_EQ(g.body(), Formula::eq(Term::var("y"), Term::succ(Term::var("x"))));
}

TEST(Parse, SmallestAtom) {
  EXPECT_EQ(P("0 = 0"), Formula::eq(Term::zero(), Term::zero()));
}

TEST(Parse, RejectsKeywordAsVariable) {
  EXPECT_THROW(P("v = 0"), SyntaxError);
}

TEST(Parse, ReportsPosition) {
  try {
    P("0 = ");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, SentenceFlagRejectsFreeVariables) {
  EXPECT_THROW(parse_formula("x = 0", true), Error);
  EXPECT_NO_THROW(parse_formula("Ax. x = 0", true));
}

TEST(Print, FixedLayout) {
  Formula f = Formula::ch_or(Formula::truth(), Formula::negation(Formula::truth()));
  EXPECT_EQ(to_string(f), "(0 = 0) vv (~(0 = 0))");
}

TEST(Print, NumeralsAsPrimes) {
  EXPECT_EQ(to_string(Term::numeral(2)), "0''");
  EXPECT_EQ(Term::numeral(3), Term::succ(Term::succ(Term::succ(Term::zero()))));
}

TEST(Print, RoundTripGenerated) {
  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = g.formula(1 + i % 5, {"x", "y"});
    std::string text = to_string(f);
    Formula back = P(text.c_str());
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(to_string(back), text);
  }
}

TEST(Serialize, JsonRoundTripGenerated) {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    Formula f = g.formula(1 + i % 4, {"x"});
    EXPECT_EQ(formula_from_json(to_json(f)), f);
  }
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(P("x = y'")), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(free_vars(P("EEx. x = y")), (std::set<std::string>{"y"}));
}

TEST(FreeVars, ClosureIsSentence) {
  Gen g(13);
  for (int i = 0; i < 300; ++i) {
    Formula f = g.formula(4, {"x", "y", "z"});
    Formula c = choice_closure(f);
    EXPECT_TRUE(free_vars(c).empty()) << to_string(c);
    EXPECT_TRUE(is_sentence(c));
  }
}

TEST(FreeVars, ClosureOrderIsFirstOccurrence) {
  EXPECT_EQ(to_string(choice_closure(P("x = u + u"))), "AAx. AAu. x = u + u");
  EXPECT_EQ(free_vars_ordered(P("(Ey. y = b) & a = b")),
            (std::vector<std::string>{"b", "a"}));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(P("x = x"), "x", Term::numeral(5)), P("5 = 5"));
  EXPECT_EQ(substitute(P("EEx. x = y"), "y", Term::zero()), P("EEx. x = 0"));
  Formula f = P("Ay. x + y = y'");
  EXPECT_EQ(substitute(f, "x", Term::var("x")), f);
}

TEST(Substitute, CaptureIsRejected) {
  EXPECT_THROW(substitute(P("Ey. x = y"), "x", Term::var("y")), CaptureError);
}

TEST(Substitute, FreeVariableLaw) {
  Gen g(14);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Formula f = g.formula(4, {"x", "y"});
    if (!free_vars(f).count("x")) continue;
    Term t = g.term(2, {"a"});
    std::optional<Formula> r;
    try {
      r = substitute(f, "x", t);
    } catch (const CaptureError&) {
      continue;
    }
    std::set<std::string> want = free_vars(f);
    want.erase("x");
    for (const auto& u : free_vars(t)) want.insert(u);
    EXPECT_EQ(free_vars(*r), want) << to_string(f);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(AlphaEqual, RenamedBinders) {
  EXPECT_TRUE(alpha_equal(P("AAx. EEy. y = x'"), P("AAa. EEb. b = a'")));
  EXPECT_FALSE(alpha_equal(P("AAx. EEy. y = x'"), P("AAx. EEy. x = y'")));
}

TEST(Elementarization, Examples) {
  EXPECT_EQ(elementarization(P("EEx. x = 0")), Formula::falsity());
  Formula e = P("(Ax. x = x) -> 0 = 0'");
  EXPECT_EQ(elementarization(e), e);
  EXPECT_EQ(elementarization(P("(Ex. x = 0) -> EEx. x = 0")),
            P("(Ex. x = 0) -> 0 = 0'"));
}

TEST(Elementarization, ElementaryAndIdempotent) {
  Gen g(15);
  for (int i = 0; i < 400; ++i) {
    Formula f = g.formula(5, {"x"});
    Formula e = elementarization(f);
    EXPECT_TRUE(is_elementary(e)) << to_string(f);
    EXPECT_EQ(elementarization(e), e);
  }
}

TEST(Developments, MachineChoosesDisjunct) {
  Formula p = P("0 = 0"), q = P("0 = 0'");
  auto d = developments(Formula::ch_or(p, q), Player::Machine, "w");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].move, (MoveTemplate{Player::Machine, {}, Payload::Kind::Left}));
  EXPECT_EQ(d[0].result, p);
  EXPECT_EQ(d[1].move, (MoveTemplate{Player::Machine, {}, Payload::Kind::Right}));
  EXPECT_EQ(d[1].result, q);
}

TEST(Developments, EnvironmentInstantiates) {
  auto d = developments(P("AAx. x = x"), Player::Environment, "w");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].move.kind, Payload::Kind::Const);
  EXPECT_EQ(d[0].result, P("w = w"));
}

TEST(Developments, CountMatchesOccurrenceScan) {
  Gen g(16);
  for (int i = 0; i < 500; ++i) {
    Formula f = g.formula(1 + i % 5, {"x"});
    for (Player p : {Player::Machine, Player::Environment}) {
      auto [binary, quant] = testing::owned_counts(f, p);
      EXPECT_EQ(developments(f, p, "w").size(), 2 * binary + quant) << to_string(f);
    }
  }
}

TEST(Yield, EmptyRun) {
  Formula f = P("AAx. EEy. y = x'");
  EXPECT_EQ(yield(f, {}), f);
}

TEST(Yield, OneSubstitution) {
  Formula f = P("AAx. EEy. y = x'");
  clarith::Run run{{Player::Environment, {}, Payload::constant_of(3)}};
  EXPECT_EQ(yield(f, run), P("EEy. y = 3'"));
}

TEST(Yield, IllegalMoveNamesIndex) {
  Formula f = P("AAx. EEy. y = x'");
  clarith::Run run{{Player::Environment, {}, Payload::constant_of(3)},
          {Player::Environment, {}, Payload::constant_of(4)}};
  try {
    yield(f, run);
    FAIL();
  } catch (const LegalityError& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_EQ(e.condition(), "wrong-player");
  }
}

TEST(CheckMove, Conditions) {
  Formula f = P("AAx. (EEy. y = x) vv 0 = 0");
  EXPECT_EQ(check_move(f, {Player::Environment, {}, Payload::left()})->condition,
            "wrong-payload");
  EXPECT_EQ(check_move(f, {Player::Environment, {0}, Payload::left()})->condition,
            "non-surface");
  EXPECT_EQ(check_move(f, {Player::Environment, {3}, Payload::left()})->condition,
            "wrong-path");
  EXPECT_FALSE(check_move(f, {Player::Environment, {}, Payload::constant_of(1)}));
}

TEST(Surface, AntecedentFlipsOwner) {
  Formula f = P("(EEx. x = 0) -> EEx. x = 0");
  auto env = developments(f, Player::Environment, "w");
  ASSERT_EQ(env.size(), 1u);
  EXPECT_EQ(env[0].move.path, (Path{0}));
  auto mach = developments(f, Player::Machine, "w");
  ASSERT_EQ(mach.size(), 1u);
  EXPECT_EQ(mach[0].move.path, (Path{1}));
}

}  // namespace
}  // namespace clarith
