#include <gtest/gtest.h>

#include "antiunify/subsumption.hpp"
#include "helpers.hpp"
#include "properties.hpp"

namespace {

using namespace antiunify;
using testing_support::G;
using testing_support::T;

constexpr Relation kAll[] = {Relation::kSubseteq, Relation::kPreceq, Relation::kSubseteqInj,
                             Relation::kPreceqInj};

TEST(RelationNames, RoundTrip) {
  for (Relation r : kAll) EXPECT_EQ(parse_relation(relation_name(r)), r);
  EXPECT_EQ(parse_relation("preceq_inj"), Relation::kPreceqInj);
  EXPECT_FALSE(parse_relation("subsumes"));
  EXPECT_TRUE(is_injective(Relation::kSubseteqInj));
  EXPECT_FALSE(is_injective(Relation::kPreceq));
  EXPECT_TRUE(is_renaming_only(Relation::kPreceqInj));
}

TEST(CheckGeneralization, GeneralizationsOfOneGoal) {
  const Goal target = G("p(t(1), t(2), u(+(4, X_2))), q(a(t(u(1)))).");
  for (const char* text : {"p(X, Y, Z).", "q(a(X)).", "p(t(1), Y, u(Z)), q(W)."}) {
    const Goal g = G(text);
    const auto w = check_generalization(g, target, Relation::kSubseteq);
    ASSERT_TRUE(w) << text;
    EXPECT_TRUE(verify_witness(g, target, *w, Relation::kSubseteq));
    EXPECT_FALSE(check_generalization(g, target, Relation::kPreceq)) << text;
  }
  const auto w = check_generalization(G("p(X, Y, Z)."), target, Relation::kSubseteq);
  EXPECT_EQ(*w, (Substitution{{"X", T("t(1)")}, {"Y", T("t(2)")}, {"Z", T("u(+(4, X_2))")}}));
}

TEST(CheckGeneralization, ReflexiveWithEmptyWitness) {
  const Goal g = G("p(X, f(Y)), q(Y), r(a).");
  for (Relation r : kAll) {
    const auto w = check_generalization(g, g, r);
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->empty());
  }
}

TEST(CheckGeneralization, EmptyGoalGeneralizesEverything) {
  for (Relation r : kAll) EXPECT_TRUE(check_generalization(Goal{}, G("p(a)."), r));
  EXPECT_FALSE(check_generalization(G("p(X)."), Goal{}, Relation::kSubseteq));
}

TEST(CheckGeneralization, InjectiveRotationHasNoWitness) {
  const Goal g1 = G("and(A, B), or(B, C), xor(C, A).");
  const Goal g2 = G("and(X, Z), or(Y, X), xor(Z, Y).");
  EXPECT_FALSE(check_generalization(g1, g2, Relation::kPreceqInj));
  EXPECT_FALSE(check_generalization(g1, g2, Relation::kPreceq));
  EXPECT_FALSE(check_generalization(G("and(A, B), or(B, C)."), g2, Relation::kPreceqInj));
  EXPECT_TRUE(check_generalization(G("and(A, B)."), g2, Relation::kPreceqInj));
}

TEST(CheckGeneralization, InjectivityRestrictions) {
  // Two variables onto one term.
  EXPECT_TRUE(check_generalization(G("p(X, Y)."), G("p(a, a)."), Relation::kSubseteq));
  EXPECT_FALSE(check_generalization(G("p(X, Y)."), G("p(a, a)."), Relation::kSubseteqInj));
  EXPECT_TRUE(check_generalization(G("p(X, Y)."), G("p(A, A)."), Relation::kPreceq));
  EXPECT_FALSE(check_generalization(G("p(X, Y)."), G("p(A, A)."), Relation::kPreceqInj));
  // Two atoms onto one.
  EXPECT_TRUE(check_generalization(G("p(X), p(Y)."), G("p(a)."), Relation::kSubseteq));
  EXPECT_FALSE(check_generalization(G("p(X), p(Y)."), G("p(a)."), Relation::kSubseteqInj));
  // Renamings cannot instantiate.
  EXPECT_FALSE(check_generalization(G("p(X)."), G("p(f(a))."), Relation::kPreceq));
  EXPECT_TRUE(check_generalization(G("p(X)."), G("p(f(a))."), Relation::kSubseteqInj));
}

TEST(CheckGeneralization, BacktracksOverAtomChoices) {
  // The first candidate for p(X, Y) fails later on q(Y).
  const Goal g = G("p(X, Y), q(Y).");
  const Goal target = G("p(a, b), p(c, d), q(d).");
  const auto w = check_generalization(g, target, Relation::kSubseteq);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Substitution{{"X", T("c")}, {"Y", T("d")}}));
}

TEST(VerifyWitness, RejectsWrongKindsOfWitness) {
  const Goal g = G("p(X, Y).");
  EXPECT_TRUE(verify_witness(g, G("p(a, b)."), Substitution{{"X", T("a")}, {"Y", T("b")}},
                             Relation::kSubseteqInj));
  EXPECT_FALSE(verify_witness(g, G("p(a, b)."), Substitution{{"X", T("a")}, {"Y", T("b")}},
                              Relation::kPreceq));
  EXPECT_FALSE(verify_witness(g, G("p(a, b)."), Substitution{{"X", T("a")}}, Relation::kSubseteq));
  // Bindings outside vars(g) do not matter.
  EXPECT_TRUE(verify_witness(g, G("p(X, Y)."), Substitution{{"Q", T("a")}}, Relation::kPreceqInj));
}

TEST(CheckGeneralization, InjectiveSubseteqIsNotTransitive) {
  // Each step is injective, the composition maps X and Y to the same term,
  // and no other witness exists.
  const Goal g1 = G("p(X, Y).");
  const Goal g2 = G("p(f(Z), W).");
  const Goal g3 = G("p(f(a), f(a)).");
  EXPECT_TRUE(check_generalization(g1, g2, Relation::kSubseteqInj));
  EXPECT_TRUE(check_generalization(g2, g3, Relation::kSubseteqInj));
  EXPECT_FALSE(check_generalization(g1, g3, Relation::kSubseteqInj));
}

TEST(QuasiOrder, RandomGoals) {
  const auto report = testing_support::check_quasi_order(3, 300);
  EXPECT_TRUE(report.ok()) << report.summary();
}

}  // namespace
