#include <gtest/gtest.h>

#include "linelab/rational_simplex.hpp"

using namespace linelab;

namespace {

LinearConstraint row(std::vector<Rational> coefficients, Relation rel, Rational rhs) {
  LinearConstraint c;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) c.terms.emplace_back(static_cast<int>(i), coefficients[i]);
  c.relation = rel;
  c.rhs = rhs;
  return c;
}

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Simplex, TextbookMaximum) {
  LinearProgram lp{2, {q(3), q(2)}, {}};
  lp.constraints = {row({q(1), q(1)}, Relation::LessEqual, q(4)), row({q(1), q(3)}, Relation::LessEqual, q(6)),
                    row({q(1), q(0)}, Relation::LessEqual, q(3))};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, q(11));
  EXPECT_EQ(s.values, (std::vector<Rational>{q(3), q(1)}));
}

TEST(Simplex, FractionalOptimum) {
  LinearProgram lp{1, {q(1)}, {row({q(3)}, Relation::LessEqual, q(1))}};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, q(1, 3));
}

TEST(Simplex, Infeasible) {
  LinearProgram lp{1, {q(1)}, {row({q(1)}, Relation::GreaterEqual, q(2)), row({q(1)}, Relation::LessEqual, q(1))}};
  EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
  LinearProgram lp{2, {q(1), q(0)}, {row({q(1), q(-1)}, Relation::LessEqual, q(1))}};
  EXPECT_EQ(solve_lp(lp).status, LpStatus::Unbounded);
}

TEST(Simplex, Equalities) {
  LinearProgram lp{2, {q(1), q(1)}, {row({q(1), q(2)}, Relation::Equal, q(4)), row({q(1), q(0)}, Relation::LessEqual, q(2))}};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, q(3));
  EXPECT_EQ(s.values, (std::vector<Rational>{q(2), q(1)}));
}

TEST(Simplex, MinimizationThroughNegation) {
  LinearProgram lp{2, {q(-1), q(-1)}, {row({q(1), q(1)}, Relation::GreaterEqual, q(2))}};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, q(-2));
}

TEST(Simplex, NegativeRightHandSide) {
  // -x <= -3 means x >= 3
  LinearProgram lp{1, {q(-1)}, {row({q(-1)}, Relation::LessEqual, q(-3))}};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.values[0], q(3));
}

TEST(Simplex, RedundantEqualities) {
  LinearProgram lp{2, {q(1), q(0)}, {row({q(1), q(1)}, Relation::Equal, q(2)), row({q(2), q(2)}, Relation::Equal, q(4))}};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, q(2));
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(Simplex, DegenerateCyclingExample) {
  LinearProgram lp{4, {q(3, 4), q(-20), q(1, 2), q(-6)}, {}};
  lp.constraints = {row({q(1, 4), q(-8), q(-1), q(9)}, Relation::LessEqual, q(0)),
                    row({q(1, 2), q(-12), q(-1, 2), q(3)}, Relation::LessEqual, q(0)),
                    row({q(0), q(0), q(1), q(0)}, Relation::LessEqual, q(1))};
  const auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective, q(5, 4));
}
