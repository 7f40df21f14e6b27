#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "constrict/capacity.hpp"
#include "constrict/model.hpp"

namespace constrict {

enum class UpdateRule { Bayes, Geometric, Dempster, Imaging };

/// One-letter tag used in logs and reports: B, G, D, I.
char rule_tag(UpdateRule rule);
UpdateRule rule_from_name(const std::string& name);
std::string rule_name(UpdateRule rule);

/// Mass reallocation scheme for imaging: f(B, X) is the fraction of the mass
/// sitting on a focal set X that moves to B once evidence E arrives.
/// A valid transfer function satisfies
///   (a) sum_B f(B, X) = 1 for every nonempty X,
///   (b) f(B, X) = 0 whenever B is disjoint from the evidence,
///   (c) f(empty, X) = 0.
/// Construction does not enforce (a)-(c); validate_transfer reports them, and
/// imaging_update refuses invalid inputs.
class TransferFunction {
 public:
  /// Columns map a source set X to the distribution {B -> f(B,X)}.
  /// Entries must lie in [0,1]; zero entries may be omitted.
  TransferFunction(int atom_count, Event evidence,
                   std::map<std::uint32_t, std::map<std::uint32_t, Rational>>
                       columns);

  /// f(B,X)=1 for B = X∩E when that is nonempty; mass on sets outside the
  /// evidence moves to E itself.
  static TransferFunction dempster_style(int atom_count, Event evidence);
  /// Mass on X spreads uniformly over the atoms of X∩E; mass on sets outside
  /// the evidence spreads uniformly over the atoms of E.
  static TransferFunction uniform_within(int atom_count, Event evidence);
  /// Builtin by name: "dempster-style" or "uniform-within-E".
  static TransferFunction builtin(const std::string& name, int atom_count,
                                  Event evidence);

  int atom_count() const { return n_; }
  const Event& evidence() const { return evidence_; }
  Rational value(const Event& B, const Event& X) const;
  const std::map<std::uint32_t, std::map<std::uint32_t, Rational>>& columns()
      const {
    return cols_;
  }

 private:
  int n_;
  Event evidence_;
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> cols_;
};

struct TransferViolation {
  char constraint;  // 'a', 'b', or 'c'
  std::uint32_t target;  // B (unused for (a))
  std::uint32_t source;  // X
  std::string detail;
};

struct TransferReport {
  bool ok = true;
  std::vector<TransferViolation> violations;
};

TransferReport validate_transfer(const TransferFunction& t);

/// Conditions every vertex on E. Any vertex with P(E)=0 is a hard error; the
/// represented set would silently change if such vertices were dropped.
CredalSet gen_bayes_update(const CredalSet& C, const Event& E);

/// Table G(A) = L(A∩E)/L(E); the posterior upper bound is its conjugate.
/// When L is not 2-monotone the pair can cross, which callers detect through
/// ProbInterval::crossed().
SetFunction geometric_update(const SetFunction& L, const Event& E);

/// Mass-level geometric conditioning: keep the focal sets inside E and
/// renormalize by bel(E). Realizes the table rule above when the input is a
/// belief function, and stays one.
MassFunction geometric_update(const MassFunction& m, const Event& E);

/// Intersect each focal set with E and renormalize by pl(E).
MassFunction dempster_update(const MassFunction& m, const Event& E);

/// m'(B) = sum_X f(B, X) m(X). Throws if t fails validation, naming the
/// first violated constraint.
MassFunction imaging_update(const MassFunction& m, const TransferFunction& t);

using BeliefState = std::variant<CredalSet, MassFunction>;

/// Envelope interval of a state for one event: vertex min/max for a credal
/// set, belief/plausibility for a mass.
ProbInterval state_interval(const BeliefState& state, const Event& A);
int state_atom_count(const BeliefState& state);

/// Snapshot of one update. The prior is stored whole because Dempster and
/// imaging updates are not injective; nothing short of the full state can
/// reverse them.
struct UpdateRecord {
  UpdateRule rule;
  Event evidence;
  BeliefState prior;
  BeliefState posterior;
};

/// Dispatches by rule and state kind:
///   Bayes:     credal -> credal; mass -> credal via core vertices (small n).
///   Geometric: mass -> mass; credal inputs are rejected since the posterior
///              table generally leaves the space of credal/mass models.
///   Dempster:  mass -> mass; credal accepted when its lower envelope is a
///              belief function.
///   Imaging:   like Dempster, and requires a transfer function.
UpdateRecord apply_update(const BeliefState& state, UpdateRule rule,
                          const Event& E,
                          const std::optional<TransferFunction>& transfer = {});

/// Exact reversal: returns the recorded prior.
BeliefState forget(const UpdateRecord& r);

/// State just before the last k updates of the chain; k = size restores the
/// initial state (stabilized forgetting).
BeliefState forget_last(const std::vector<UpdateRecord>& chain, int k);

}  // namespace constrict
