#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "antiunify/errors.hpp"
#include "antiunify/syntax.hpp"
#include "helpers.hpp"

namespace {

using namespace antiunify;
using testing_support::A;
using testing_support::G;
using testing_support::T;

// Every goal written out in the worked examples we test against.
const char* const kCorpus[] = {
    "p(3), q(X), r(+(2, 4), +(3, X)).",
    "p(X, Y, Z).",
    "p(t(1), t(2), u(+(4, X))), q(a(t(u(1)))).",
    "p(t(X), Y), q(3, f(X)).",
    "p(5, Z), q(3, f(Z)).",
    "p(f(x, Y)), q(Y, X).",
    "a(Y, Z), a(t(1), X).",
    "p(t, u).",
    "p(t, X), p(X, u).",
    "p(X, t(4)), r(u(5, s(Y)), 8), r(u(8, Z), 5).",
    "p(A), r(u(8, s(3)), 5).",
    "'='(X, or(Y, Z)), '='(V, and(Y, Z)).",
    "'='(B, or(C, D)), '='(A, and(C, D)), '='(E, and(F, G)).",
    "and(A, B), or(B, C), xor(C, A).",
    "and(X, Z), or(Y, X), xor(Z, Y).",
    "p(A), p(B), q(A).",
    "add(X, Y, Z), even(X), odd(Z), p(Z).",
    "add(A, B, C), add(C, B, A), even(C), odd(A), p(C).",
    "p(X, 5, q(Y, 4)), p(W, t(Z)), p(r(X, 3), t(5)), p(r(W, 3), t(Z)).",
    "+(4, *(X, '%'(Y, 2))).",
};

TEST(Syntax, CorpusRoundTripsLosslessly) {
  for (const char* text : kCorpus) {
    const Goal g = G(text);
    const std::string printed = to_string(g);
    EXPECT_EQ(G(printed), g) << text;
    EXPECT_EQ(to_string(G(printed)), printed) << text;
  }
}

TEST(Syntax, PrintsCanonicalSpacing) {
  EXPECT_EQ(to_string(G("p(X,t(4)),q( a ).")), "p(X, t(4)), q(a).");
  EXPECT_EQ(to_string(T("+(3,X)")), "+(3, X)");
  EXPECT_EQ(to_string(A("zero")), "zero");
}

TEST(Syntax, EmptyGoal) {
  EXPECT_TRUE(G(".").empty());
  EXPECT_EQ(to_string(Goal{}), ".");
}

TEST(Syntax, QuotedNamesSurviveRoundTrip) {
  const Atom eq = A("'='(X, Y)");
  EXPECT_EQ(eq.predicate, "=");
  EXPECT_EQ(A(to_string(eq)), eq);
  const Term q = T("'hello world'");
  EXPECT_EQ(q.symbol(), "hello world");
  EXPECT_EQ(to_string(q), "'hello world'");
}

TEST(Syntax, IntegersAreConstants) {
  const Term n = T("-12");
  EXPECT_TRUE(n.is_constant());
  EXPECT_EQ(n.symbol(), "-12");
  EXPECT_EQ(T("+(3, X)").symbol(), "+");
}

TEST(Syntax, DocumentWithLabelsAndComments) {
  const GoalDocument doc = parse_goals(
      "% first pair\n"
      "g1: p(X), q(X).  % trailing\n"
      "q(Y).\n");
  ASSERT_EQ(doc.goals.size(), 2u);
  EXPECT_EQ(doc.goals[0].name, "g1");
  EXPECT_TRUE(doc.goals[0].labeled);
  EXPECT_EQ(doc.goals[0].line, 2u);
  EXPECT_EQ(doc.goals[1].name, "goal2");
  EXPECT_FALSE(doc.goals[1].labeled);
  EXPECT_EQ(parse_goals(to_string(doc)), doc);
}

TEST(Syntax, ErrorsCarryLineAndColumn) {
  try {
    parse_goals("p(X).\nq(X,,Y).\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(G("p(X)"), ParseError);
  EXPECT_THROW(G("p(X). q(Y)."), ParseError);
  EXPECT_THROW(G("P(X)."), ParseError);
  EXPECT_THROW(G("p(3x)."), ParseError);
  EXPECT_THROW(G("p(+)."), ParseError);
  EXPECT_THROW(T("'unterminated"), ParseError);
}

TEST(Syntax, StrictArityRejectsOverloadedPredicates) {
  const char* text = "p(A), p(X, t(4)).";
  EXPECT_NO_THROW(parse_goals(text));
  ParseOptions strict;
  strict.strict_arity = true;
  EXPECT_THROW(parse_goals(text, strict), ArityConflict);
  EXPECT_THROW(parse_goals("p(A).\np(X, Y).", strict), ArityConflict);
}

TEST(Syntax, DuplicateAtomsCollapse) {
  EXPECT_EQ(G("p(X), p(X), q.").size(), 2u);
}

TEST(Syntax, DataFilesParse) {
  for (const char* name : {"shared_q_g1", "shared_q_g2", "weights_g1", "weights_g2", "dataflow_g1", "dataflow_g2", "arith_g1",
                           "arith_g2", "rotation_g1", "rotation_g2"}) {
    std::ifstream in(std::string(ANTIUNIFY_TEST_DATA) + "/" + name + ".goal");
    ASSERT_TRUE(in) << name;
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(parse_goals(buf.str()).goals.size(), 1u) << name;
  }
}

}  // namespace
