#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "constrict/rational.hpp"

namespace constrict {

/// Hard cap on atom count; events are 32-bit masks and several operations
/// enumerate all 2^n subsets.
inline constexpr int kMaxAtoms = 24;

/// Cap for operations that materialize a dense table over all 2^n events
/// (set functions, Möbius transforms, transfer columns).
inline constexpr int kMaxDenseAtoms = 16;

/// Finite state space: an ordered list of distinct atom labels.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> atoms);

  /// Space with generated labels w0..w{n-1}; convenient for generated
  /// instances where labels carry no meaning.
  static StateSpace with_default_labels(int n);

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::string& label(int atom) const { return atoms_.at(atom); }
  const std::vector<std::string>& labels() const { return atoms_; }

  /// Index of a label; throws ValidationError for unknown labels.
  int index_of(const std::string& label) const;

  bool operator==(const StateSpace&) const = default;

 private:
  std::vector<std::string> atoms_;
};

/// Subset of a state space, stored as a bitmask over atom indices together
/// with the universe size so that complement is total.
class Event {
 public:
  Event() : bits_(0), n_(0) {}
  Event(std::uint32_t bits, int universe_size);

  static Event empty(int universe_size) { return Event(0, universe_size); }
  static Event full(int universe_size);
  static Event singleton(int atom, int universe_size);
  static Event from_indices(const std::vector<int>& atoms, int universe_size);

  std::uint32_t bits() const { return bits_; }
  int universe_size() const { return n_; }
  int count() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return *this == full(n_); }
  bool contains(int atom) const { return (bits_ >> atom) & 1u; }
  bool subset_of(const Event& other) const;
  std::vector<int> members() const;

  Event complement() const;
  Event operator&(const Event& other) const;
  Event operator|(const Event& other) const;
  /// Set difference (elements of *this not in other).
  Event minus(const Event& other) const;

  bool operator==(const Event&) const = default;
  bool operator<(const Event& other) const;  // by mask; for ordered containers

 private:
  void require_same_space(const Event& other) const;
  std::uint32_t bits_;
  int n_;
};

/// Exact probability measure over atom indices 0..n-1. Weights are
/// nonnegative rationals summing to exactly 1.
class Measure {
 public:
  explicit Measure(std::vector<Rational> weights);

  static Measure uniform(int n);
  static Measure dirac(int atom, int n);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int atom) const { return weights_.at(atom); }
  const std::vector<Rational>& weights() const { return weights_; }

  /// P(A). Throws DomainMismatchError if A lives on another universe size.
  Rational operator()(const Event& A) const;

  /// Ordinary Bayes conditioning P(.|E); throws ConditioningError when
  /// P(E) = 0.
  Measure conditioned_on(const Event& E) const;

  bool operator==(const Measure&) const = default;

 private:
  std::vector<Rational> weights_;
};

/// Closed interval of probabilities. The usual invariant is
/// 0 <= lo <= hi <= 1; geometric conditioning of envelopes that are not
/// 2-monotone can produce lo > hi, which is preserved and reported through
/// crossed() rather than clamped.
struct ProbInterval {
  Rational lo;
  Rational hi;

  ProbInterval() : lo(0), hi(0) {}
  ProbInterval(Rational lo_, Rational hi_);

  bool crossed() const { return lo > hi; }
  bool degenerate() const { return lo == hi; }
  bool operator==(const ProbInterval&) const = default;
};

/// Convex credal set represented by a finite list of vertex measures on one
/// state space. The represented set is the convex hull of the vertices.
class CredalSet {
 public:
  CredalSet(StateSpace space, std::vector<Measure> vertices);

  const StateSpace& space() const { return space_; }
  int atom_count() const { return space_.size(); }
  const std::vector<Measure>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  bool operator==(const CredalSet&) const = default;

 private:
  StateSpace space_;
  std::vector<Measure> vertices_;
};

/// Finite measurable partition: disjoint nonempty blocks covering the space.
class Partition {
 public:
  const std::vector<Event>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int universe_size() const { return n_; }

  friend Partition validate_partition(int universe_size,
                                      const std::vector<Event>& blocks);

 private:
  Partition(std::vector<Event> blocks, int n)
      : blocks_(std::move(blocks)), n_(n) {}
  std::vector<Event> blocks_;
  int n_;
};

/// Validate blocks as a partition (nonempty, pairwise disjoint, covering);
/// errors name the offending block index.
Partition validate_partition(int universe_size,
                             const std::vector<Event>& blocks);
Partition validate_partition(const StateSpace& space,
                             const std::vector<Event>& blocks);

/// min over vertices of P(A); equals the infimum over the hull because
/// P(A) is linear in P.
Rational lower_prob(const CredalSet& C, const Event& A);

/// max over vertices of P(A); conjugate to lower_prob via
/// upper(A) = 1 - lower(A^c), exactly.
Rational upper_prob(const CredalSet& C, const Event& A);

/// [lower_prob, upper_prob] in one pass.
ProbInterval event_interval(const CredalSet& C, const Event& A);

/// Indices of vertices attaining lower_prob / upper_prob.
std::vector<int> argmin_vertices(const CredalSet& C, const Event& A);
std::vector<int> argmax_vertices(const CredalSet& C, const Event& A);

}  // namespace constrict
