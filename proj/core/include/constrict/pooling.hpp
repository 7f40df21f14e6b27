#pragma once

#include <vector>

#include "constrict/model.hpp"

namespace constrict {

/// Row-stochastic matrix of revision weights: entry (i,j) is how much agent i
/// leans on agent j's current opinion.
class WeightMatrix {
 public:
  explicit WeightMatrix(std::vector<std::vector<Rational>> rows);
  int size() const { return static_cast<int>(rows_.size()); }
  const Rational& at(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

WeightMatrix matrix_multiply(const WeightMatrix& A, const WeightMatrix& B);
/// Exact W^n by repeated squaring; n = 0 gives the identity.
WeightMatrix matrix_power(const WeightMatrix& W, int n);

/// One opinion (a full measure over the parameter space) per agent.
struct OpinionProfile {
  StateSpace space;
  std::vector<Measure> opinions;
};

void validate_profile(const OpinionProfile& F);

/// One synchronous revision round: agent i's next opinion is the row-i
/// weighted mixture of everybody's current opinions.
OpinionProfile degroot_step(const WeightMatrix& W, const OpinionProfile& F);

struct ConsensusCondition {
  bool holds = false;
  int holds_at = -1;  // smallest n with an everywhere-positive column of W^n
  int checked_up_to = 0;
};

/// Positivity of powers is tracked with boolean products; entries are
/// nonnegative, so no cancellation can turn a positive entry back to zero.
ConsensusCondition consensus_condition(const WeightMatrix& W, int maxN = 64);

struct StationaryResult {
  bool unique = false;
  std::vector<Rational> pi;  // filled when unique
  // Affine dimension of {pi : pi W = pi, sum pi = 1}; 0 means unique. When
  // the consensus condition fails the space can be larger, and callers get
  // the dimension instead of an arbitrary representative.
  int solution_dim = 0;
};

/// Exact left fixed vector of W normalized to sum 1, by Gaussian elimination.
StationaryResult stationary_vector(const WeightMatrix& W);

/// The common limit opinion: the stationary-weighted mixture of the initial
/// opinions. Requires a unique stationary vector.
Measure consensus_limit(const WeightMatrix& W, const OpinionProfile& F);

struct NestingTrace {
  std::vector<ProbInterval> intervals;  // index n = after n rounds
  bool weakly_nested = false;
  // Smallest s with some r < s such that both bounds moved strictly inward
  // between rounds r and s; -1 when no such pair exists. first_strict_from
  // is the matching smallest r.
  int first_strict_at = -1;
  int first_strict_from = -1;
};

/// Tracks [min_i F_i(A), max_i F_i(A)] over N revision rounds.
NestingTrace nesting_trace(const WeightMatrix& W, const OpinionProfile& F,
                           const Event& A, int N);

}  // namespace constrict
