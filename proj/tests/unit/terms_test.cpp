#include <gtest/gtest.h>

#include "antiunify/errors.hpp"
#include "antiunify/substitution.hpp"
#include "antiunify/syntax.hpp"
#include "antiunify/term.hpp"
#include "helpers.hpp"
#include "random.hpp"

namespace {

using namespace antiunify;
using testing_support::A;
using testing_support::G;
using testing_support::T;

TEST(Term, KindsAndSymbols) {
  const Term x = Term::variable("X");
  const Term c = Term::constant("a");
  const Term n = Term::integer(-4);
  const Term f = Term::compound("f", {x, c});
  EXPECT_TRUE(x.is_variable());
  EXPECT_TRUE(c.is_constant());
  EXPECT_TRUE(n.is_constant());
  EXPECT_EQ(n.symbol(), "-4");
  EXPECT_TRUE(f.is_compound());
  EXPECT_EQ(f.arity(), 2u);
  EXPECT_FALSE(f.is_ground());
  EXPECT_TRUE(Term::compound("f", {c, n}).is_ground());
}

TEST(Term, CompoundNeedsArguments) {
  EXPECT_THROW(Term::compound("f", {}), std::invalid_argument);
}

TEST(Term, StructuralEquality) {
  EXPECT_EQ(T("f(X, g(1))"), T("f(X,g(1))"));
  EXPECT_NE(T("f(X)"), T("f(Y)"));
  EXPECT_NE(T("a"), T("a(1)"));
  EXPECT_EQ(T("1"), Term::integer(1));
}

TEST(Tau, CountsAtomsAndCompoundSubterms) {
  const Goal g = G("p(f(x, Y)), q(Y, X).");
  EXPECT_EQ(tau_value(g), 4u);
  EXPECT_EQ(tau(g).size(), 4u);
  EXPECT_EQ(ter(g).size(), 7u);
  EXPECT_EQ(vars(g), (std::set<std::string>{"X", "Y"}));
  const auto t = tau(g);
  EXPECT_EQ(std::get<Atom>(t[0]), A("p(f(x, Y))"));
  EXPECT_EQ(std::get<Term>(t[1]), T("f(x, Y)"));
  EXPECT_EQ(std::get<Term>(t[2]), T("x"));
  EXPECT_EQ(std::get<Atom>(t[3]), A("q(Y, X)"));
}

TEST(Tau, CountsOccurrencesNotDistinctTerms) {
  EXPECT_EQ(tau_value(A("p(a, a, f(a))")), 5u);
  EXPECT_EQ(tau_value(A("p(X, Y)")), 1u);
  EXPECT_EQ(tau_value(A("p")), 1u);
}

TEST(Vars, FirstOccurrenceOrder) {
  EXPECT_EQ(vars_in_order(G("p(B, f(A)), q(C, B).")), (std::vector<std::string>{"B", "A", "C"}));
}

TEST(Goal, DeduplicatesAndKeepsFirstInsertionOrder) {
  Goal g;
  EXPECT_TRUE(g.insert(A("q(X)")));
  EXPECT_TRUE(g.insert(A("p(X)")));
  EXPECT_FALSE(g.insert(A("q(X)")));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], A("q(X)"));
  EXPECT_EQ(g, G("p(X), q(X)."));
}

TEST(Goal, PredicateIdentityIncludesArity) {
  const Goal g = G("p(A), p(X, t(4)).");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_FALSE(g[0].same_symbol(g[1]));
}

TEST(Substitution, IdentityBindingsAreDropped) {
  Substitution s{{"X", T("X")}, {"Y", T("a")}};
  EXPECT_EQ(s.size(), 1u);
  s.bind("Y", T("Y"));
  EXPECT_TRUE(s.empty());
}

TEST(Substitution, ApplyIsSimultaneous) {
  const Substitution s{{"X", T("Y")}, {"Y", T("f(X)")}};
  EXPECT_EQ(apply(T("g(X, Y)"), s), T("g(Y, f(X))"));
}

TEST(Substitution, ApplyMayShrinkGoal) {
  const Goal g = G("p(X), p(Y), q(X).");
  const Goal h = apply(g, Substitution{{"Y", T("X")}});
  EXPECT_EQ(h, G("p(X), q(X)."));
}

TEST(Substitution, ComposeMatchesSequentialApplication) {
  testing_support::Rng rng(5);
  testing_support::Alphabet al;
  for (int i = 0; i < 200; ++i) {
    const Term t = testing_support::random_term(rng, al, 3);
    Substitution s1, s2;
    for (int k = 1; k <= 3; ++k) {
      if (testing_support::coin(rng, 0.5)) s1.bind("X" + std::to_string(k), testing_support::random_term(rng, al, 1));
      if (testing_support::coin(rng, 0.5)) s2.bind("X" + std::to_string(k), testing_support::random_term(rng, al, 1));
    }
    EXPECT_EQ(apply(apply(t, s1), s2), apply(t, compose(s1, s2))) << to_string(t);
  }
}

TEST(Substitution, RenamingAndInjectivity) {
  EXPECT_TRUE((Substitution{{"X", T("A")}, {"Y", T("B")}}).is_renaming());
  EXPECT_TRUE((Substitution{{"X", T("A")}, {"Y", T("B")}}).is_injective());
  EXPECT_FALSE((Substitution{{"X", T("A")}, {"Y", T("A")}}).is_injective());
  EXPECT_FALSE((Substitution{{"X", T("f(A)")}}).is_renaming());
}

TEST(RenameApart, OnlyClashingVariablesMove) {
  const Goal g1 = G("p(X, Y).");
  const Goal g2 = G("p(X, Z), q(X_2).");
  const auto [a, b] = rename_apart(g1, g2);
  EXPECT_EQ(a, g1);
  EXPECT_TRUE(renamed_apart(a, b));
  EXPECT_EQ(b, G("p(X_3, Z), q(X_2)."));
  const auto [c, d] = rename_apart(g1, G("q(W)."));
  EXPECT_EQ(d, G("q(W)."));
}

TEST(RenameApart, RequireThrowsOnSharedVariable) {
  EXPECT_THROW(require_renamed_apart(G("p(X)."), G("q(X).")), SharedVariables);
  EXPECT_NO_THROW(require_renamed_apart(G("p(X)."), G("q(Y).")));
}

TEST(Skeleton, VariablesAreInterchangeable) {
  EXPECT_TRUE(same_skeleton(A("p(X, f(Y))"), A("p(A, f(A))")));
  EXPECT_FALSE(same_skeleton(A("p(X, f(Y))"), A("p(A, f(b))")));
  EXPECT_TRUE(are_variants(A("p(X, f(Y))"), A("p(A, f(B))")));
  EXPECT_FALSE(are_variants(A("p(X, f(Y))"), A("p(A, f(A))")));
  EXPECT_FALSE(are_variants(A("p(X, f(X))"), A("p(A, f(B))")));
}

TEST(Canonical, RenumbersByFirstOccurrence) {
  EXPECT_EQ(canonical_variables(A("p(B, f(A), B)")), A("p(_C1, f(_C2), _C1)"));
  EXPECT_EQ(canonical_variables(G("q(Z), p(Y, Z).")), G("q(_C1), p(_C2, _C1)."));
}

}  // namespace
