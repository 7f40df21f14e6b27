#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "constrict/capacity.hpp"
#include "constrict/model.hpp"
#include "constrict/updating.hpp"

namespace constrict {

/// Seeded generator with hand-rolled mappings on top of the (standardized)
/// mt19937_64 stream, so identical seeds give identical instances on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform over [lo, hi], both inclusive.
  int uniform_int(int lo, int hi);

  /// Uniform over {0/denom, 1/denom, ..., denom/denom}.
  Rational uniform_fraction(int denom);

 private:
  std::mt19937_64 engine_;
};

/// Weights are small random integers, normalized. With strictly_positive
/// every atom gets weight at least 1/(20n).
Measure random_measure(Rng& rng, int n, bool strictly_positive);

CredalSet random_credal_set(Rng& rng, const StateSpace& space, int vertices,
                            bool strictly_positive);

/// Nonempty proper subset.
Event random_event(Rng& rng, int n);

/// Between 2 and min(n,4) nonempty blocks.
Partition random_partition(Rng& rng, int n);

/// Random nonnegative normalized mass on 1..max_focal random nonempty sets.
MassFunction random_mass(Rng& rng, int n, int max_focal);

/// Mass concentrated on two-atom focal sets (plus a little on the whole
/// space), which makes evidence cut across focal sets often; dilation under
/// conditioning is much more frequent here than under plain random masses.
MassFunction random_cross_mass(Rng& rng, int n);

/// Random table with f(empty)=0, f(full)=1 and arbitrary values elsewhere
/// (not necessarily monotone).
SetFunction random_set_function(Rng& rng, int n);

/// Random transfer function for the given evidence, valid by construction.
TransferFunction random_transfer(Rng& rng, int n, const Event& evidence);

/// Strictly positive row-stochastic matrix: a random stochastic matrix
/// averaged with the uniform one, so every entry is at least 1/(2k).
std::vector<std::vector<Rational>> random_positive_stochastic(Rng& rng, int k);

}  // namespace constrict
