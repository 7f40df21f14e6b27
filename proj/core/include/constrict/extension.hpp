#pragma once

#include <string>
#include <vector>

#include "constrict/analysis.hpp"
#include "constrict/linprog.hpp"
#include "constrict/model.hpp"

namespace constrict {

/// A finite probability assessment: stated probabilities for a few events,
/// and a further event whose coherent probability range is wanted.
struct Assessment {
  StateSpace space;
  std::vector<Event> events;
  std::vector<Rational> probs;
  Event target;
};

void validate_assessment(const Assessment& a);

struct DeFinettiResult {
  bool feasible = false;
  bool determined = false;  // bounds collapse to a point
  ProbInterval bounds;
};

/// Exact min and max of P(target) over all measures matching the assessment.
/// Incoherent assessments come back infeasible rather than as an error.
DeFinettiResult definetti_bounds(const Assessment& a);

/// Classifies picking the value p for the target: strict constriction in the
/// open interval, weak at an endpoint, a coherence error outside.
Verdict definetti_select(const Assessment& a, const Rational& p);

/// Drops every vertex that is a convex combination of the others (exact LP
/// membership per vertex, after removing duplicates). The envelope is
/// unchanged.
CredalSet extreme_points(const CredalSet& C);

struct SelectionReport {
  CredalSet extremes;
  std::vector<Rational> weights;  // decomposition of the point over extremes
  Rational min_weight;            // best achievable smallest weight
  bool strictly_inside = false;   // some decomposition has all weights > 0
  // Events with a nondegenerate envelope interval where the selected point
  // sits exactly on a bound; constriction is only weak there.
  std::vector<Event> weak_events;
  std::vector<Event> degenerate_events;  // bounds already coincide
  bool strict_for_all_nondegenerate = false;
};

/// Classifies selecting the single measure P* out of the credal set. The
/// decomposition LP maximizes the smallest mixture weight over the extreme
/// points; a positive optimum certifies strict constriction for every event
/// whose envelope interval is nondegenerate.
SelectionReport selection_classify(const CredalSet& C, const Measure& Pstar);

struct MaxEntResult {
  Measure measure;                // exact mixture at the final weights
  std::vector<Rational> weights;  // over the credal set's vertices
  double entropy = 0.0;
  double duality_gap = 0.0;  // linearization bound at the stopping point
  // The stopping rule evaluates logarithms in floating point; this is the
  // only non-exact computation in the library and is flagged as such.
  bool approximate = true;
};

/// Entropy maximizer over the hull, by conditional-gradient ascent on the
/// mixture weights with a duality-gap stop of 1e-12.
MaxEntResult maxent_select(const CredalSet& C);

/// Exact convex mixture of measures.
Measure convex_pool(const std::vector<Measure>& measures,
                    const std::vector<Rational>& weights);

struct HalmosResult {
  Rational pi;     // mixture probability of the extended set
  Rational inner;  // best subalgebra approximation from below
  Rational outer;  // ... and from above
  bool trivial = false;  // the set was already in the subalgebra
  bool ok = false;       // inner <= pi <= outer
};

/// Finite two-stage extension: a measure mu on X, one kernel measure on Y per
/// x, a target subset A of Y, and a subalgebra of events on Y that does not
/// contain A. The mixture pi lands between the mu-averaged inner and outer
/// subalgebra approximations of A.
HalmosResult halmos_extension(const Measure& mu,
                              const std::vector<Measure>& kernels,
                              const Event& A,
                              const std::vector<Event>& subalgebra);

}  // namespace constrict
