#include <gtest/gtest.h>

#include <sstream>

#include "entropy_adjoint/landauer.hpp"

using namespace entropy_adjoint;

namespace {
const LineSystem kReals = numeric_line_system(LineKind::reals, "identity");
const LineSystem kNaturals = numeric_line_system(LineKind::naturals, "identity");
constexpr auto kRev = StepClass::reversible;
constexpr auto kIrr = StepClass::irreversible_increasing;
constexpr auto kDec = StepClass::entropy_decreasing;
}  // namespace

TEST(Classify, ThreeWays) {
  EXPECT_EQ(classify_step(make_step(kReals, Rational(1), Rational(1))), kRev);
  EXPECT_EQ(classify_step(make_step(kReals, Rational(1), Rational(2))), kIrr);
  EXPECT_EQ(classify_step(make_step(kReals, Rational(2), Rational(1))), kDec);
  EXPECT_THROW(classify_step(make_step(kNaturals, Rational(1, 2), Rational(1))), InputError);
  EXPECT_EQ(to_string(kIrr), "irreversible");
}

TEST(Transfer, CeilingCollapsesSteps) {
  const LineMap f(kReals, kNaturals, LineExpr::ceil_div(3));
  const auto moved = transfer_step(f, make_step(f.source(), Rational(1), Rational(6, 5)));
  EXPECT_EQ(moved.pre, 1);
  EXPECT_EQ(moved.post, 1);
  EXPECT_EQ(classify_step(moved), kRev);
}

TEST(Table, CountsAndCsv) {
  TransferTable t;
  t.add(kRev, kRev);
  t.add(kIrr, kRev);
  t.add(kIrr, kRev);
  t.add(kDec, kDec);
  EXPECT_EQ(t.count(kIrr, kRev), 2u);
  EXPECT_EQ(t.total(), 4u);
  EXPECT_EQ(t.decreasing(), 1u);
  EXPECT_EQ(t.occupancy().size(), 2u);
  std::ostringstream csv;
  t.write_csv(csv);
  EXPECT_EQ(csv.str(),
            "source,reversible,irreversible,decreasing\n"
            "reversible,1,0,0\n"
            "irreversible,2,0,0\n"
            "decreasing,0,0,1\n");
  EXPECT_EQ((t + t).count(kIrr, kRev), 4u);
}

TEST(Patterns, SubsetMatching) {
  TransferTable diag;
  diag.add(kRev, kRev);
  diag.add(kIrr, kIrr);
  EXPECT_EQ(match_case_patterns(diag).size(), 3u);
  TransferTable down = diag;
  down.add(kIrr, kRev);
  EXPECT_EQ(match_case_patterns(down), std::vector<CasePattern>{CasePattern::case2});
  TransferTable up = diag;
  up.add(kRev, kIrr);
  EXPECT_EQ(match_case_patterns(up), std::vector<CasePattern>{CasePattern::case1});
  TransferTable both = down;
  both.add(kRev, kIrr);
  EXPECT_TRUE(match_case_patterns(both).empty());
  // decreasing steps never decide a pattern
  diag.add(kDec, kRev);
  EXPECT_EQ(match_case_patterns(diag).size(), 3u);
  EXPECT_FALSE(allows(CasePattern::case3, kIrr, kRev));
  EXPECT_TRUE(allows(CasePattern::case1, kRev, kIrr));
}

TEST(Empirical, RequiresVerifiedConnection) {
  const auto bad = check_connection(LineMap(kReals, kNaturals, LineExpr::ceil_div(3)),
                                    LineMap(kNaturals, kReals, LineExpr::affine(2, 0)));
  const std::vector<std::pair<Rational, Rational>> steps{{Rational(1), Rational(2)}};
  EXPECT_THROW(empirical_table(bad, FunctorChoice::left, steps), InputError);
}

TEST(Empirical, GridSweepUnderLeftFunctor) {
  const auto conn = check_connection(LineMap(kReals, kNaturals, LineExpr::ceil_div(3)),
                                     LineMap(kNaturals, kReals, LineExpr::affine(3, 0)));
  const auto t = empirical_table(conn, FunctorChoice::left, all_probe_steps(conn.left.source()));
  EXPECT_EQ(t.count(kRev, kIrr), 0u);
  EXPECT_GT(t.count(kIrr, kRev), 0u);
  EXPECT_EQ(t.total(), 181u * 181u);
}
