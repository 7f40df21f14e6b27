#pragma once

#include <vector>

#include "constrict/rational.hpp"

namespace constrict {

/// Linear program in standard form:
///   minimize c·x  subject to  A x = b,  x >= 0.
/// All data exact rationals. Rows of A must have the same length as c.
struct LPProblem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational objective;       // meaningful only when Optimal
  std::vector<Rational> x;  // meaningful only when Optimal
};

/// Two-phase simplex with Bland's rule, so it terminates on every input.
/// Intended for the small polytopes that show up here (tens of variables).
LPResult lp_minimize(const LPProblem& prob);

/// Same solver on negated costs; `objective` is reported in the caller's
/// (maximization) sign convention.
LPResult lp_maximize(const LPProblem& prob);

/// Feasibility of {x >= 0 : A x = b} alone.
bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                 const std::vector<Rational>& b);

}  // namespace constrict
