#include "constrict/pooling.hpp"

#include <algorithm>

#include "constrict/errors.hpp"

namespace constrict {

WeightMatrix::WeightMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("weight matrix is empty");
  const std::size_t k = rows_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (rows_[i].size() != k)
      throw ValidationError("weight matrix row " + std::to_string(i) +
                            " has " + std::to_string(rows_[i].size()) +
                            " entries; expected " + std::to_string(k));
    Rational sum = 0;
    for (const auto& v : rows_[i]) {
      if (v < 0)
        throw ValidationError("negative weight in row " + std::to_string(i));
      sum += v;
    }
    if (sum != 1)
      throw ValidationError("row " + std::to_string(i) + " sums to " +
                            to_string(sum) + ", not 1");
  }
}

WeightMatrix matrix_multiply(const WeightMatrix& A, const WeightMatrix& B) {
  if (A.size() != B.size())
    throw DomainMismatchError("matrix sizes differ");
  int k = A.size();
  std::vector<std::vector<Rational>> out(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      if (A.at(i, l) == 0) continue;
      for (int j = 0; j < k; ++j) out[i][j] += A.at(i, l) * B.at(l, j);
    }
  return WeightMatrix(std::move(out));
}

WeightMatrix matrix_power(const WeightMatrix& W, int n) {
  if (n < 0) throw ValidationError("negative matrix power");
  int k = W.size();
  std::vector<std::vector<Rational>> id(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i) id[i][i] = 1;
  WeightMatrix result(std::move(id));
  WeightMatrix base = W;
  while (n > 0) {
    if (n & 1) result = matrix_multiply(result, base);
    n >>= 1;
    if (n > 0) base = matrix_multiply(base, base);
  }
  return result;
}

void validate_profile(const OpinionProfile& F) {
  if (F.opinions.empty()) throw ValidationError("no opinions in the profile");
  for (const auto& P : F.opinions)
    if (P.size() != F.space.size())
      throw DomainMismatchError("opinion lives on a different space");
}

OpinionProfile degroot_step(const WeightMatrix& W, const OpinionProfile& F) {
  validate_profile(F);
  if (W.size() != static_cast<int>(F.opinions.size()))
    throw DomainMismatchError("matrix size does not match the agent count");
  int k = W.size();
  int n = F.space.size();
  OpinionProfile out{F.space, {}};
  out.opinions.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> w(n, Rational(0));
    for (int j = 0; j < k; ++j) {
      if (W.at(i, j) == 0) continue;
      for (int a = 0; a < n; ++a)
        w[a] += W.at(i, j) * F.opinions[j].weight(a);
    }
    out.opinions.emplace_back(std::move(w));
  }
  return out;
}

ConsensusCondition consensus_condition(const WeightMatrix& W, int maxN) {
  if (maxN < 1) throw ValidationError("need at least one power to check");
  int k = W.size();
  std::vector<std::vector<bool>> pos(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) pos[i][j] = W.at(i, j) > 0;
  ConsensusCondition res;
  res.checked_up_to = maxN;
  auto positive_column = [&](const std::vector<std::vector<bool>>& m) {
    for (int j = 0; j < k; ++j) {
      bool all = true;
      for (int i = 0; i < k; ++i)
        if (!m[i][j]) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };
  std::vector<std::vector<bool>> cur = pos;
  for (int n = 1; n <= maxN; ++n) {
    if (n > 1) {
      std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
      for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l)
          if (cur[i][l])
            for (int j = 0; j < k; ++j)
              if (pos[l][j]) next[i][j] = true;
      cur = std::move(next);
    }
    if (positive_column(cur)) {
      res.holds = true;
      res.holds_at = n;
      return res;
    }
  }
  return res;
}

StationaryResult stationary_vector(const WeightMatrix& W) {
  const int k = W.size();
  // Unknowns pi_0..pi_{k-1}; rows: (W^T - I) pi = 0 plus the normalization.
  std::vector<std::vector<Rational>> M;
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> row(k + 1, Rational(0));
    for (int i = 0; i < k; ++i) {
      row[i] = W.at(i, j);
      if (i == j) row[i] -= 1;
    }
    M.push_back(std::move(row));
  }
  M.emplace_back(k + 1, Rational(1));

  // Exact Gauss-Jordan elimination.
  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int col = 0; col < k && rank < static_cast<int>(M.size()); ++col) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(M.size()); ++r)
      if (M[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[rank], M[pr]);
    Rational inv = M[rank][col];
    for (auto& v : M[rank]) v /= inv;
    for (int r = 0; r < static_cast<int>(M.size()); ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (int c = 0; c <= k; ++c) M[r][c] -= f * M[rank][c];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(M.size()); ++r)
    if (M[r][k] != 0)
      throw Error("internal: stationary system inconsistent");

  StationaryResult res;
  res.solution_dim = k - rank;
  res.unique = res.solution_dim == 0;
  if (res.unique) {
    res.pi.assign(k, Rational(0));
    for (int r = 0; r < rank; ++r) res.pi[pivot_col_of_row[r]] = M[r][k];
    // pi W = pi must hold exactly; anything else is an elimination bug.
    for (int j = 0; j < k; ++j) {
      Rational s = 0;
      for (int i = 0; i < k; ++i) s += res.pi[i] * W.at(i, j);
      if (s != res.pi[j])
        throw Error("internal: stationary vector fails pi W = pi");
    }
  }
  return res;
}

Measure consensus_limit(const WeightMatrix& W, const OpinionProfile& F) {
  validate_profile(F);
  if (W.size() != static_cast<int>(F.opinions.size()))
    throw DomainMismatchError("matrix size does not match the agent count");
  StationaryResult st = stationary_vector(W);
  if (!st.unique)
    throw ValidationError(
        "no unique stationary vector (solution space dimension " +
        std::to_string(st.solution_dim) + "); consensus is not determined");
  int n = F.space.size();
  std::vector<Rational> w(n, Rational(0));
  for (int j = 0; j < W.size(); ++j)
    for (int a = 0; a < n; ++a) w[a] += st.pi[j] * F.opinions[j].weight(a);
  return Measure(w);
}

NestingTrace nesting_trace(const WeightMatrix& W, const OpinionProfile& F,
                           const Event& A, int N) {
  validate_profile(F);
  if (A.universe_size() != F.space.size())
    throw DomainMismatchError("event lives on a different space");
  if (N < 0) throw ValidationError("negative round count");
  NestingTrace trace;
  OpinionProfile cur = F;
  auto record = [&]() {
    Rational lo = cur.opinions.front()(A), hi = lo;
    for (const auto& P : cur.opinions) {
      Rational v = P(A);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    trace.intervals.emplace_back(lo, hi);
  };
  record();
  for (int n = 0; n < N; ++n) {
    cur = degroot_step(W, cur);
    record();
  }
  trace.weakly_nested = true;
  for (std::size_t n = 1; n < trace.intervals.size(); ++n) {
    if (trace.intervals[n].lo < trace.intervals[n - 1].lo ||
        trace.intervals[n].hi > trace.intervals[n - 1].hi)
      trace.weakly_nested = false;
  }
  for (std::size_t s = 1; s < trace.intervals.size() && trace.first_strict_at < 0;
       ++s)
    for (std::size_t r = 0; r < s; ++r)
      if (trace.intervals[s].lo > trace.intervals[r].lo &&
          trace.intervals[s].hi < trace.intervals[r].hi) {
        trace.first_strict_at = static_cast<int>(s);
        trace.first_strict_from = static_cast<int>(r);
        break;
      }
  return trace;
}

}  // namespace constrict
