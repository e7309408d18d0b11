#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace linelab {

using Rational = mpq_class;

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  int variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> values;
  std::uint64_t pivots = 0;
};

/// Two-phase primal simplex on a dense tableau in exact rational arithmetic.
/// Pivot selection follows Bland's rule, so the method terminates.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace linelab
