#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constrict/capacity.hpp"
#include "constrict/model.hpp"
#include "constrict/updating.hpp"

namespace constrict {

enum class VerdictKind {
  StrictConstriction,
  WeakConstriction,
  StrictDilation,
  WeakDilation,
  Neither,
};

enum class VerdictScope { Uniform, Pointwise, MerelyPointwise, SingleEvidence };

std::string kind_name(VerdictKind k);
std::string scope_name(VerdictScope s);

struct Verdict {
  VerdictKind kind = VerdictKind::Neither;
  VerdictScope scope = VerdictScope::SingleEvidence;
  ProbInterval before;
  ProbInterval after;
};

/// Exact interval comparison.
///   strict constriction: both bounds move strictly inward.
///   weak constriction:   one bound equal, the other strictly inward.
///   dilation:            mirrored outward; equal-on-both-sides is "neither"
///                        (the weak case needs one strict inequality).
Verdict classify_uniform(const ProbInterval& before, const ProbInterval& after);

struct BlockOutcome {
  Event block;
  ProbInterval interval;
  VerdictKind kind = VerdictKind::Neither;
};

struct PartitionReport {
  ProbInterval prior;
  std::vector<BlockOutcome> blocks;
  std::vector<Event> skipped;  // blocks null under every vertex
  VerdictKind pointwise = VerdictKind::Neither;
  // Pointwise constriction whose block-wise inf/sup still equal the prior
  // bounds, so the uniform verdict shows no improvement at all.
  bool merely_pointwise = false;
  Verdict uniform;
};

/// Aggregates per-block kinds: all strict -> strict; a mix of weak and
/// strict constriction (or dilation) -> weak; anything else -> neither.
VerdictKind aggregate_pointwise(const std::vector<BlockOutcome>& blocks);

/// Conditions the state on every block of the partition under the given rule
/// and classifies the target event per block and in aggregate. Blocks with
/// upper probability 0 are skipped; rule preconditions on the remaining
/// blocks surface as conditioning errors. Imaging uses the named builtin
/// transfer, rebuilt per block.
PartitionReport classify_partition(
    const BeliefState& state, const Event& A, const Partition& part,
    UpdateRule rule, const std::string& imaging_transfer = "dempster-style");

struct DependenceSign {
  Rational d;    // P(A∩B) − P(A)P(B)
  int sign = 0;  // -1, 0, +1
};

DependenceSign dependence(const Measure& P, const Event& A, const Event& B);

/// Balance of conditional against marginal probability across a partition:
/// the union of blocks pulling the conditional above P(A) is charged exactly
/// when the union pulling it below is.
struct BalanceReport {
  Event positive_union;
  Event negative_union;
  Rational prob_positive;
  Rational prob_negative;
  bool ok = false;
};

BalanceReport lemma_balance_check(const Measure& P, const Event& A,
                                  const Partition& part);

/// Checks inf-over-blocks of the conditioned lower bound against the prior
/// lower bound, and the sup of the conditioned upper against the prior upper.
/// Holds on every instance for the Bayes rule. For the geometric rule it can
/// fail when the lower envelope is not 2-monotone; the report then carries
/// the exact counterexample values.
struct EnvelopeBoundReport {
  ProbInterval prior;
  Rational inf_block_lower;
  Rational sup_block_upper;
  bool lower_ok = false;
  bool upper_ok = false;
  bool ok = false;
};

EnvelopeBoundReport envelope_bound_check(const CredalSet& C, const Event& A,
                                         const Partition& part,
                                         UpdateRule rule);

/// Sufficient condition for forgetting to strictly constrict: some vertex
/// attaining the restored lower bound of A is negatively dependent on the
/// forgotten event, and some vertex attaining the upper bound is positively
/// dependent. The report also carries both interval pairs so callers can
/// confirm the strict constriction.
struct ForgettingReport {
  bool holds = false;
  std::vector<int> argmin_vertices;
  std::vector<int> argmax_vertices;
  std::vector<int> negative_witnesses;  // argmin vertices with d < 0
  std::vector<int> positive_witnesses;  // argmax vertices with d > 0
  ProbInterval restored;
  ProbInterval conditioned;
  bool strict_constriction = false;
};

ForgettingReport forgetting_condition(const CredalSet& restored, const Event& A,
                                      const Event& forgotten);

/// Classifies A under the two-block partition {E, E^c} for the geometric and
/// Dempster rules on one belief function, and checks the exchange property:
/// strict dilation under either rule must meet strict constriction under the
/// other.
struct DichotomyReport {
  ProbInterval prior;
  std::vector<BlockOutcome> geometric_blocks;
  std::vector<BlockOutcome> dempster_blocks;
  VerdictKind geometric = VerdictKind::Neither;
  VerdictKind dempster = VerdictKind::Neither;
  bool implication_ok = false;
};

DichotomyReport geom_dempster_dichotomy(const SetFunction& bel, const Event& A,
                                        const Event& E);

/// Strict constriction of A under imaging happens exactly when the imaged
/// belief rises strictly on both A and its complement. Both sides are
/// computed independently: the mass-difference sums on one hand, the
/// interval classification on the other.
struct ImagingIffReport {
  Rational sum_inside;      // Σ_{B⊆A} (m'(B) − m(B))
  Rational sum_complement;  // Σ_{B⊆A^c} (m'(B) − m(B))
  bool sums_positive = false;
  ProbInterval before;
  ProbInterval after;
  VerdictKind verdict = VerdictKind::Neither;
  bool ok = false;  // sums_positive <=> strict constriction
};

ImagingIffReport imaging_constriction_iff(const MassFunction& m,
                                          const TransferFunction& t,
                                          const Event& A);

/// Rejecting a recorded update that dilated the event of interest: restores
/// the prior when (and only when) the update dilated A. Defined for the
/// Bayes and geometric rules.
struct LeviResult {
  bool triggered = false;
  Verdict update_verdict;
  std::optional<BeliefState> restored;
  std::string statement;
};

LeviResult levi_neutral(const UpdateRecord& r, const Event& A);

/// First `count` reduced fractions strictly between lo and hi, ordered by
/// denominator, then numerator.
std::vector<Rational> enumerate_rationals_in(const Rational& lo,
                                             const Rational& hi, int count);

/// One grid point of the open-interval demonstration: conditional outcome
/// distributions given A and given its complement, over outcomes 1..N plus
/// an absorbing extra outcome that keeps the residual uninformative.
struct OpenSetPoint {
  Rational x;
  bool feasible = false;
  std::vector<Rational> given_a;      // N entries, then the absorbing outcome
  std::vector<Rational> given_not_a;  // likewise
  std::vector<Rational> posterior;    // P_x(A | outcome n), n = 1..N
};

/// Builds, for each prior value x in the grid, a joint model whose posterior
/// for A after observing outcome n equals the n-th enumerated rational q_n,
/// identically in x. Feasible exactly when the q_n straddle x; a grid point
/// with all q_n on one side is reported infeasible.
struct OpenSetReport {
  std::vector<Rational> q;
  Rational q_inf;
  Rational q_sup;
  std::vector<OpenSetPoint> points;
  bool all_feasible = false;
  bool posteriors_exact = false;
  bool inside_open_interval = false;  // (2/5, 3/5) strictly
};

OpenSetReport open_set_demo(const std::vector<Rational>& grid, int N);

}  // namespace constrict
