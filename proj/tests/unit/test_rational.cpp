#include <gtest/gtest.h>

#include "entropy_adjoint/errors.hpp"
#include "entropy_adjoint/rational.hpp"

using namespace entropy_adjoint;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("6/5"), Rational(6, 5));
  EXPECT_EQ(parse_rational("12/10"), Rational(6, 5));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("2.9"), Rational(29, 10));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "1/", "/2", "0.1e3"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(Rational, TextForms) {
  EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(to_display(Rational(6, 5)), "1.2");
  EXPECT_EQ(to_display(Rational(31, 10)), "3.1");
  EXPECT_EQ(to_display(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_display(Rational(2)), "2");
}

TEST(Rational, FloorCeilNegative) {
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(floor(Rational(7, 3)), 2);
  EXPECT_EQ(ceil(Rational(7, 3)), 3);
  EXPECT_EQ(ceil(Rational(3)), 3);
}

TEST(Rational, MixedComparisonDoesNotRecurse) {
  EXPECT_TRUE(Rational(2) == 2);
  EXPECT_TRUE(2 == Rational(4, 2));
  EXPECT_FALSE(Rational(1, 2) == 0);
}

TEST(Rational, PowersStayExactOrAreEmpty) {
  EXPECT_EQ(rational_pow(Rational(4), Rational(1, 2)), Rational(2));
  EXPECT_EQ(rational_pow(Rational(1, 8), Rational(-2, 3)), Rational(4));
  EXPECT_EQ(rational_pow(Rational(3), Rational(0)), Rational(1));
  EXPECT_FALSE(rational_pow(Rational(2), Rational(1, 2)).has_value());
}

TEST(Rational, Lcm) {
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_EQ(lcm(1, 7), 7);
}
