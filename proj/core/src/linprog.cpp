#include "constrict/linprog.hpp"

#include <cstddef>

#include "constrict/errors.hpp"

namespace constrict {

namespace {

using Row = std::vector<Rational>;

// Tableau invariant: cost[j] holds the reduced cost of variable j and
// cost.back() holds minus the current objective value.
void pivot(std::vector<Row>& T, Row& cost, std::vector<int>& basis, int row,
           int col) {
  Rational p = T[row][col];
  for (auto& v : T[row]) v /= p;
  for (std::size_t r = 0; r < T.size(); ++r) {
    if (static_cast<int>(r) == row || T[r][col] == 0) continue;
    Rational f = T[r][col];
    for (std::size_t j = 0; j < T[r].size(); ++j) T[r][j] -= f * T[row][j];
  }
  if (cost[col] != 0) {
    Rational f = cost[col];
    for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= f * T[row][j];
  }
  basis[row] = col;
}

// Bland's rule: enter the lowest-index improving column, break ratio-test
// ties toward the lowest-index basic variable. Returns false on an
// unbounded ray.
bool run_simplex(std::vector<Row>& T, Row& cost, std::vector<int>& basis,
                 int var_count) {
  const int m = static_cast<int>(T.size());
  const int last = var_count;
  while (true) {
    int enter = -1;
    for (int j = 0; j < var_count; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return true;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][last] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;
    pivot(T, cost, basis, leave, enter);
  }
}

}  // namespace

LPResult lp_minimize(const LPProblem& prob) {
  const int m = static_cast<int>(prob.A.size());
  const int n = static_cast<int>(prob.c.size());
  if (static_cast<int>(prob.b.size()) != m)
    throw ValidationError("LP right-hand side length does not match row count");
  for (const auto& row : prob.A)
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("LP row length does not match objective length");

  // Phase 1: artificial basis, minimize the artificial total.
  std::vector<Row> T(m, Row(n + m + 1, Rational(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    bool flip = prob.b[i] < 0;
    for (int j = 0; j < n; ++j) T[i][j] = flip ? -prob.A[i][j] : prob.A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = flip ? -prob.b[i] : prob.b[i];
    basis[i] = n + i;
  }
  Row cost(n + m + 1, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) cost[j] -= T[i][j];
    cost[n + m] -= T[i][n + m];
  }
  if (!run_simplex(T, cost, basis, n + m))
    throw Error("internal: phase-1 simplex reported an unbounded ray");
  if (cost[n + m] != 0) return LPResult{LPStatus::Infeasible, Rational(0), {}};

  // Remove artificials still sitting in the basis at value zero; a row with
  // no original-column pivot left is a redundant constraint.
  std::vector<bool> drop(m, false);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (T[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0)
      pivot(T, cost, basis, i, col);
    else
      drop[i] = true;
  }
  std::vector<Row> T2;
  std::vector<int> basis2;
  for (int i = 0; i < m; ++i) {
    if (drop[i]) continue;
    Row r(n + 1);
    for (int j = 0; j < n; ++j) r[j] = T[i][j];
    r[n] = T[i][n + m];
    T2.push_back(std::move(r));
    basis2.push_back(basis[i]);
  }

  // Phase 2: real costs, canonicalized against the current basis.
  Row cost2(n + 1, Rational(0));
  for (int j = 0; j < n; ++j) cost2[j] = prob.c[j];
  for (std::size_t i = 0; i < T2.size(); ++i) {
    const Rational& cb = prob.c[basis2[i]];
    if (cb == 0) continue;
    for (int j = 0; j <= n; ++j) cost2[j] -= cb * T2[i][j];
  }
  if (!run_simplex(T2, cost2, basis2, n))
    return LPResult{LPStatus::Unbounded, Rational(0), {}};

  LPResult res;
  res.status = LPStatus::Optimal;
  res.objective = -cost2[n];
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < T2.size(); ++i) res.x[basis2[i]] = T2[i][n];
  return res;
}

LPResult lp_maximize(const LPProblem& prob) {
  LPProblem neg = prob;
  for (auto& v : neg.c) v = -v;
  LPResult res = lp_minimize(neg);
  if (res.status == LPStatus::Optimal) res.objective = -res.objective;
  return res;
}

bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                 const std::vector<Rational>& b) {
  LPProblem prob;
  prob.A = A;
  prob.b = b;
  prob.c.assign(A.empty() ? 0 : A.front().size(), Rational(0));
  return lp_minimize(prob).status == LPStatus::Optimal;
}

}  // namespace constrict
