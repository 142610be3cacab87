#include <gtest/gtest.h>

#include "antiunify/variabilizer.hpp"
#include "helpers.hpp"
#include "properties.hpp"

namespace {

using namespace antiunify;
using testing_support::T;

TEST(Variabilizer, IdenticalConstantsPassThrough) {
  Variabilizer v;
  EXPECT_EQ(v.fresh(T("5"), T("5")), T("5"));
  EXPECT_EQ(v.fresh(T("a"), T("a")), T("a"));
  EXPECT_TRUE(v.bindings().empty());
}

TEST(Variabilizer, MemoizedPerOrderedPair) {
  Variabilizer v;
  const Term xy = v.fresh(T("X"), T("Y"));
  EXPECT_EQ(v.fresh(T("X"), T("Y")), xy);
  EXPECT_NE(v.fresh(T("X"), T("Z")), xy);
  EXPECT_NE(v.fresh(T("Y"), T("X")), xy);
  EXPECT_EQ(xy, T("V1"));
  ASSERT_EQ(v.lookup(T("X"), T("Y")), xy);
  EXPECT_FALSE(v.lookup(T("Z"), T("X")));
}

TEST(Variabilizer, SameVariableStillGetsFreshVariable) {
  Variabilizer v;
  const Term t = v.fresh(T("X"), T("X"));
  EXPECT_TRUE(t.is_variable());
  EXPECT_NE(t, T("X"));
}

TEST(Variabilizer, DifferentConstantsOrCompoundsAreVariabilized) {
  Variabilizer v;
  EXPECT_TRUE(v.fresh(T("5"), T("6")).is_variable());
  EXPECT_TRUE(v.fresh(T("f(a)"), T("f(a)")).is_variable());
  EXPECT_TRUE(v.fresh(T("a"), T("X")).is_variable());
}

TEST(Variabilizer, SkipsReservedNames) {
  Variabilizer v({"V1", "V2"});
  EXPECT_EQ(v.fresh(T("a"), T("b")), T("V3"));
  v.reserve({"V4"});
  EXPECT_EQ(v.fresh(T("a"), T("c")), T("V5"));
  EXPECT_THROW(v.reserve({"V3"}), std::logic_error);
}

TEST(Variabilizer, RollbackForgetsLaterBindings) {
  Variabilizer v;
  const Term first = v.fresh(T("a"), T("b"));
  const std::size_t m = v.mark();
  v.fresh(T("c"), T("d"));
  v.fresh(T("e"), T("f"));
  v.rollback(m);
  EXPECT_EQ(v.bindings().size(), 1u);
  EXPECT_FALSE(v.lookup(T("c"), T("d")));
  EXPECT_EQ(v.fresh(T("a"), T("b")), first);
  // Names issued after the mark are handed out again.
  EXPECT_EQ(v.fresh(T("g"), T("h")), T("V2"));
}

TEST(Variabilizer, ProjectionsAreTheWitnesses) {
  Variabilizer v;
  const Term a = v.fresh(T("X"), T("s(3)"));
  const Term b = v.fresh(T("5"), T("Z"));
  const auto* binding = v.binding_of(a.symbol());
  ASSERT_NE(binding, nullptr);
  EXPECT_EQ(binding->right, T("s(3)"));
  EXPECT_EQ(v.binding_of("W"), nullptr);
  const Substitution left = v.left_projection({a.symbol(), b.symbol(), "Other"});
  const Substitution right = v.right_projection({a.symbol(), b.symbol()});
  EXPECT_EQ(left, (Substitution{{a.symbol(), T("X")}, {b.symbol(), T("5")}}));
  EXPECT_EQ(right, (Substitution{{a.symbol(), T("s(3)")}, {b.symbol(), T("Z")}}));
}

TEST(Variabilizer, RandomRequestsKeepAllConditions) {
  const auto report = testing_support::check_variabilizer(17, 10000);
  EXPECT_TRUE(report.ok()) << report.summary();
  EXPECT_GE(report.checks, 5000u);
}

}  // namespace
