#include <gtest/gtest.h>

#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/galois.hpp"
#include "entropy_adjoint/line_map.hpp"

using namespace entropy_adjoint;

namespace {
const LineSystem kReals = numeric_line_system(LineKind::reals, "identity");
const LineSystem kNaturals = numeric_line_system(LineKind::naturals, "identity");
}  // namespace

TEST(LineExpr, Evaluates) {
  EXPECT_EQ(LineExpr::ceil_div(3)(Rational(7, 2)), 2);
  EXPECT_EQ(LineExpr::ceil_div(3)(Rational(3)), 1);
  EXPECT_EQ(LineExpr::floor_div(3)(Rational(89, 10)), 2);
  EXPECT_EQ(LineExpr::affine(Rational(1, 2), 1)(Rational(3)), Rational(5, 2));
  EXPECT_EQ(LineExpr::constant(4)(Rational(100)), 4);
  EXPECT_EQ(LineExpr::compose(LineExpr::affine(3, 0), LineExpr::ceil_div(3))(Rational(4)), 6);
  EXPECT_THROW(LineExpr::floor_div(0), InputError);
}

TEST(LineExpr, DescribeAndHint) {
  EXPECT_EQ(LineExpr::ceil_div(3).describe(), "ceil(x/3)");
  EXPECT_EQ(LineExpr::affine(3, 0).describe(), "3*x");
  EXPECT_EQ(LineExpr::compose(LineExpr::affine(3, 0), LineExpr::ceil_div(3)).describe(), "3*ceil(x/3)");
  // twice the breakpoint denominator, so midpoints between breakpoints are probed
  EXPECT_EQ(LineExpr::ceil_div(3).resolution_hint(), 2);
  EXPECT_EQ(LineExpr::ceil_div(Rational(3, 2)).resolution_hint(), 4);
  EXPECT_EQ(LineExpr::affine(Rational(1, 2), 0).resolution_hint(), 4);
}

TEST(LineMap, RefinesCarrierToHint) {
  const LineMap f(kReals, kNaturals, LineExpr::ceil_div(3));
  EXPECT_EQ(f.source().line().resolution(), 2);
  EXPECT_EQ(f(Rational(6, 5)), 1);
  EXPECT_THROW(LineMap(kReals, kNaturals, LineExpr::affine(Rational(1, 2), 0)), InputError);
  EXPECT_THROW(f(Rational(-1)), InputError);
}

TEST(LineMap, ResidualsRecoverClosedForms) {
  const LineMap f(kReals, kNaturals, LineExpr::ceil_div(3));
  const auto g = synthesize_adjoint(f, AdjointSide::right_of);
  ASSERT_TRUE(g.has_value());
  ASSERT_TRUE(g->expression().has_value());
  EXPECT_EQ(g->describe(), "3*x");

  const LineMap three(kNaturals, kReals, LineExpr::affine(3, 0));
  const auto lower = synthesize_adjoint(three, AdjointSide::left_of);
  ASSERT_TRUE(lower.has_value());
  EXPECT_EQ(lower->describe(), "ceil(x/3)");
  const auto upper = synthesize_adjoint(three, AdjointSide::right_of);
  ASSERT_TRUE(upper.has_value());
  EXPECT_EQ(upper->describe(), "floor(x/3)");
}

TEST(LineMap, NoAdjointWhenNoneExists) {
  // floor(x) on the reals has no right adjoint: sup{x : floor x <= d} is not attained.
  const LineMap f(kReals, kReals, LineExpr::floor_div(1));
  EXPECT_FALSE(synthesize_adjoint(f, AdjointSide::right_of).has_value());
  EXPECT_TRUE(synthesize_adjoint(f, AdjointSide::left_of).has_value());
  // constant maps miss the bottom requirement of a left adjoint
  const LineMap c(kReals, kReals, LineExpr::constant(1));
  EXPECT_FALSE(synthesize_adjoint(c, AdjointSide::right_of).has_value());
}

TEST(LineMap, ComposeAndPreimage) {
  const LineMap f(kReals, kNaturals, LineExpr::ceil_div(3));
  const LineMap g(kNaturals, kReals, LineExpr::affine(3, 0));
  const LineMap k = compose(g, f);
  EXPECT_EQ(k(Rational(4)), 6);
  EXPECT_EQ(find_preimage(g, Rational(6)), Rational(2));
  EXPECT_FALSE(find_preimage(g, Rational(7)).has_value());
  EXPECT_TRUE(find_preimage(f, Rational(5)).has_value());
}
