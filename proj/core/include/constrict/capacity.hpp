#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "constrict/model.hpp"
#include "constrict/rational.hpp"

namespace constrict {

/// Total set function on 2^Omega, stored densely indexed by event bitmask.
/// Atom count is capped at kMaxDenseAtoms.
class SetFunction {
 public:
  SetFunction(int atom_count, std::vector<Rational> table);

  static SetFunction from_fn(int atom_count,
                             const std::function<Rational(Event)>& fn);
  /// Pointwise lower envelope min_P P(A) of a credal set.
  static SetFunction lower_envelope(const CredalSet& C);
  /// Dense table of a single measure (the precise case).
  static SetFunction from_measure(const Measure& P);
  /// f(A) = 0 for A != Omega, f(Omega) = 1.
  static SetFunction vacuous(int atom_count);

  int atom_count() const { return n_; }
  std::uint32_t table_size() const { return 1u << n_; }
  const Rational& at_mask(std::uint32_t mask) const { return table_[mask]; }
  const Rational& operator()(const Event& A) const;

  /// Conjugate g(A) = 1 - f(A^c). For a capacity this is the dual
  /// (upper) set function.
  SetFunction conjugate() const;

  bool operator==(const SetFunction&) const = default;

 private:
  int n_;
  std::vector<Rational> table_;
};

/// Möbius representation: rational mass per focal (nonzero) event, sparse.
/// Invariants: (a) no mass on the empty set, (b) total mass exactly 1.
/// Masses may be negative (the Möbius transform of a non-belief set
/// function); belief functions are exactly the all-nonnegative case.
class MassFunction {
 public:
  MassFunction(int atom_count, std::map<std::uint32_t, Rational> masses);

  static MassFunction vacuous(int atom_count);
  /// Mass concentrated on singletons, reproducing a precise measure.
  static MassFunction from_measure(const Measure& P);

  int atom_count() const { return n_; }
  /// Focal elements in ascending bitmask order (deterministic iteration).
  const std::map<std::uint32_t, Rational>& focal() const { return masses_; }
  Rational mass(const Event& A) const;
  bool all_nonnegative() const;

  /// bel(A) = sum of masses of focal elements inside A.
  Rational belief(const Event& A) const;
  /// pl(A) = sum of masses of focal elements meeting A; equals
  /// 1 - belief(A^c) exactly.
  Rational plausibility(const Event& A) const;
  /// [belief, plausibility] of A.
  ProbInterval interval(const Event& A) const;

  bool operator==(const MassFunction&) const = default;

 private:
  int n_;
  std::map<std::uint32_t, Rational> masses_;
};

/// Möbius transform m(A) = Σ_{B⊆A} (−1)^{|A\B|} f(B), computed by the
/// in-place subset transform. Requires f(∅)=0 and f(Ω)=1 so the result is a
/// valid mass function; masses may still be negative.
MassFunction mobius_transform(const SetFunction& f);

/// Inverse (zeta) transform: bel(A) = Σ_{B⊆A} m(B). Exact round trip with
/// mobius_transform in both directions.
SetFunction belief_from_mass(const MassFunction& m);

/// Normalized (f(∅)=0, f(Ω)=1) and monotone under inclusion.
bool is_capacity(const SetFunction& f);

/// Violating instance returned by the k-monotonicity / k-alternation checks:
/// the outer event A and the chosen subsets (supersets) A_1..A_j.
struct MonotonicityWitness {
  Event outer;
  std::vector<Event> collection;
  Rational lhs;  // f(A)
  Rational rhs;  // inclusion-exclusion bound that lhs fails to meet
};

struct MonotonicityResult {
  bool holds = false;
  std::optional<MonotonicityWitness> witness;  // set iff !holds
};

/// Direct enumeration of the order-k inclusion-exclusion inequalities
///   f(A) >= Σ_{∅≠I⊆{1..j}} (−1)^{|I|−1} f(∩_{i∈I} A_i)
/// over all events A and all collections of j <= k distinct subsets A_i of A
/// (collections with repeats reduce to smaller distinct collections, so
/// distinct enumeration is exhaustive; j = 1 is monotonicity). A guard
/// refuses instances whose collection count exceeds an internal budget.
MonotonicityResult is_k_monotone(const SetFunction& f, int k);

/// Dual check: f(A) <= Σ (−1)^{|I|−1} f(∪ A_i) over collections of distinct
/// supersets A_i of A. Equivalent to is_k_monotone(f.conjugate(), k); the
/// direct enumeration is used so witnesses are in the caller's terms.
MonotonicityResult is_k_alternating(const SetFunction& f, int k);

/// Capacity with nonnegative Möbius transform (the finite-space
/// characterization of infinite monotonicity).
bool is_belief_function(const SetFunction& f);

/// Whether P dominates f eventwise: P(A) >= f(A) for every event A.
bool compatible_contains(const SetFunction& f, const Measure& P);

/// Extreme points of the compatible set of a belief function, by the
/// atom-ordering construction: for each ordering, every focal element's mass
/// is assigned to its last-ranked atom. Duplicates removed. The lower
/// envelope of the result reproduces the input exactly.
/// Enumerates n! orderings; guarded to small atom counts.
CredalSet core_vertices(const SetFunction& bel, const StateSpace& space);
CredalSet core_vertices(const SetFunction& bel);

}  // namespace constrict
