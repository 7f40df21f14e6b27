#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "constrict/updating.hpp"

namespace constrict {

struct CampaignResult {
  std::string name;
  std::uint64_t seed = 0;
  int trials = 0;      // instances generated
  int checked = 0;     // individual property evaluations
  int violations = 0;
  std::vector<std::string> notes;       // first few violations, verbatim values
  std::map<std::string, long> counters;  // named tallies (dilation hits, ...)
  bool ok() const { return violations == 0; }
};

/// Conditional/marginal balance across a partition: the blocks pulling the
/// conditional probability up are charged exactly when the blocks pulling it
/// down are. Random measures may put probability 0 on atoms.
CampaignResult check_balance_lemma(std::uint64_t seed, int trials);

/// Bayes conditioning over a partition never yields a uniform constriction
/// verdict (weak or strict) for any event. Corpus: vertex sets with strictly
/// positive weights, 3 to 5 atoms, 2 to 6 vertices, every proper event.
CampaignResult check_bayes_uniform(std::uint64_t seed, int trials);

/// Same corpus: Bayes conditioning never constricts on every block at once.
CampaignResult check_bayes_pointwise(std::uint64_t seed, int trials);

/// Same corpus, Bayes and geometric rules: the block-wise infimum of the
/// conditioned lower bound should not exceed the prior lower bound, and the
/// supremum of the conditioned upper bound should not fall short of the
/// prior upper. Holds for Bayes. For the geometric rule this fails on
/// envelopes that are not 2-monotone; violations are counted and the first
/// ones recorded, not suppressed.
CampaignResult check_envelope_bounds(std::uint64_t seed, int trials);

/// Rejection-samples instances where the forgetting condition holds (an
/// argmin vertex negatively dependent on the forgotten event and an argmax
/// vertex positively dependent) and verifies that forgetting then strictly
/// constricts. `needed` counts condition-holding instances.
CampaignResult check_forgetting(std::uint64_t seed, int needed);

/// Random belief functions on 4 atoms, all event/evidence pairs with
/// positive belief on both sides: strict dilation under the geometric rule
/// must meet strict constriction under Dempster's rule, and conversely.
/// Alternates plain and cross-cutting masses so genuine dilation instances
/// actually occur; their count is reported.
CampaignResult check_dichotomy(std::uint64_t seed, int trials);

/// Random (mass, transfer, event) triples: the two mass-difference sums are
/// positive exactly when the update strictly constricts the event.
CampaignResult check_imaging_iff(std::uint64_t seed, int trials);

/// Campaign names accepted by the command line, mapped onto the checks
/// above: lemma13, prop14, prop15, lemma46, thm48, thm410, thm411.
CampaignResult run_check(const std::string& theorem, std::uint64_t seed,
                         int trials);
std::vector<std::string> known_checks();

}  // namespace constrict
