#include "constrict/model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "constrict/errors.hpp"

namespace constrict {

StateSpace::StateSpace(std::vector<std::string> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ValidationError("state space needs at least one atom");
  if (static_cast<int>(atoms_.size()) > kMaxAtoms)
    throw SizeError("state space has " + std::to_string(atoms_.size()) +
                    " atoms; the cap is " + std::to_string(kMaxAtoms));
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms_) {
    if (a.empty()) throw ValidationError("empty atom label");
    if (!seen.insert(a).second)
      throw ValidationError("duplicate atom label '" + a + "'");
  }
}

StateSpace StateSpace::with_default_labels(int n) {
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (int i = 0; i < n; ++i) atoms.push_back("w" + std::to_string(i));
  return StateSpace(std::move(atoms));
}

int StateSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (atoms_[i] == label) return i;
  throw ValidationError("unknown atom label '" + label + "'");
}

Event::Event(std::uint32_t bits, int universe_size)
    : bits_(bits), n_(universe_size) {
  if (universe_size < 0 || universe_size > kMaxAtoms)
    throw SizeError("event universe size " + std::to_string(universe_size) +
                    " outside [0, " + std::to_string(kMaxAtoms) + "]");
  if (universe_size < 32 && (bits >> universe_size) != 0)
    throw ValidationError("event mask has bits outside the universe");
}

Event Event::full(int universe_size) {
  return Event(universe_size >= 32 ? ~0u : ((1u << universe_size) - 1u),
               universe_size);
}

Event Event::singleton(int atom, int universe_size) {
  if (atom < 0 || atom >= universe_size)
    throw ValidationError("atom index " + std::to_string(atom) +
                          " outside the universe");
  return Event(1u << atom, universe_size);
}

Event Event::from_indices(const std::vector<int>& atoms, int universe_size) {
  std::uint32_t bits = 0;
  for (int a : atoms) {
    if (a < 0 || a >= universe_size)
      throw ValidationError("atom index " + std::to_string(a) +
                            " outside the universe");
    bits |= 1u << a;
  }
  return Event(bits, universe_size);
}

int Event::count() const { return std::popcount(bits_); }

bool Event::subset_of(const Event& other) const {
  require_same_space(other);
  return (bits_ & ~other.bits_) == 0;
}

std::vector<int> Event::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Event Event::complement() const {
  return Event(~bits_ & Event::full(n_).bits(), n_);
}

Event Event::operator&(const Event& other) const {
  require_same_space(other);
  return Event(bits_ & other.bits_, n_);
}

Event Event::operator|(const Event& other) const {
  require_same_space(other);
  return Event(bits_ | other.bits_, n_);
}

Event Event::minus(const Event& other) const {
  require_same_space(other);
  return Event(bits_ & ~other.bits_, n_);
}

bool Event::operator<(const Event& other) const { return bits_ < other.bits_; }

void Event::require_same_space(const Event& other) const {
  if (n_ != other.n_)
    throw DomainMismatchError("events on different state spaces (" +
                              std::to_string(n_) + " vs " +
                              std::to_string(other.n_) + " atoms)");
}

Measure::Measure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ValidationError("measure needs at least one atom");
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0)
      throw ValidationError("negative weight at atom " + std::to_string(i));
    total += weights_[i];
  }
  if (total != 1)
    throw ValidationError("weights sum to " + to_string(total) + ", not 1");
}

Measure Measure::uniform(int n) {
  return Measure(std::vector<Rational>(n, Rational(1, n)));
}

Measure Measure::dirac(int atom, int n) {
  std::vector<Rational> w(n, Rational(0));
  w.at(atom) = 1;
  return Measure(std::move(w));
}

Rational Measure::operator()(const Event& A) const {
  if (A.universe_size() != size())
    throw DomainMismatchError("event universe (" +
                              std::to_string(A.universe_size()) +
                              ") does not match measure size (" +
                              std::to_string(size()) + ")");
  Rational s = 0;
  for (int i = 0; i < size(); ++i)
    if (A.contains(i)) s += weights_[i];
  return s;
}

Measure Measure::conditioned_on(const Event& E) const {
  Rational pe = (*this)(E);
  if (pe == 0)
    throw ConditioningError("conditioning on an event of probability zero");
  std::vector<Rational> w(size(), Rational(0));
  for (int i = 0; i < size(); ++i)
    if (E.contains(i)) w[i] = weights_[i] / pe;
  return Measure(std::move(w));
}

ProbInterval::ProbInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo < 0 || lo > 1 || hi < 0 || hi > 1)
    throw ValidationError("interval endpoints outside [0,1]");
}

CredalSet::CredalSet(StateSpace space, std::vector<Measure> vertices)
    : space_(std::move(space)), vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw ValidationError("credal set needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].size() != space_.size())
      throw DomainMismatchError("vertex " + std::to_string(i) + " has " +
                                std::to_string(vertices_[i].size()) +
                                " atoms; the state space has " +
                                std::to_string(space_.size()));
}

Partition validate_partition(int universe_size,
                             const std::vector<Event>& blocks) {
  if (blocks.empty()) throw ValidationError("partition needs at least one block");
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Event& b = blocks[i];
    if (b.universe_size() != universe_size)
      throw DomainMismatchError("partition block " + std::to_string(i) +
                                " lives on a different state space");
    if (b.is_empty())
      throw ValidationError("partition block " + std::to_string(i) +
                            " is empty");
    if (seen & b.bits())
      throw ValidationError("partition block " + std::to_string(i) +
                            " overlaps an earlier block");
    seen |= b.bits();
  }
  if (seen != Event::full(universe_size).bits())
    throw ValidationError("partition blocks do not cover the state space");
  return Partition(blocks, universe_size);
}

Partition validate_partition(const StateSpace& space,
                             const std::vector<Event>& blocks) {
  return validate_partition(space.size(), blocks);
}

Rational lower_prob(const CredalSet& C, const Event& A) {
  if (A.universe_size() != C.atom_count())
    throw DomainMismatchError("event does not live on the credal set's space");
  Rational best = C.vertices()[0](A);
  for (int i = 1; i < C.vertex_count(); ++i) {
    Rational v = C.vertices()[i](A);
    if (v < best) best = v;
  }
  return best;
}

Rational upper_prob(const CredalSet& C, const Event& A) {
  if (A.universe_size() != C.atom_count())
    throw DomainMismatchError("event does not live on the credal set's space");
  Rational best = C.vertices()[0](A);
  for (int i = 1; i < C.vertex_count(); ++i) {
    Rational v = C.vertices()[i](A);
    if (v > best) best = v;
  }
  return best;
}

ProbInterval event_interval(const CredalSet& C, const Event& A) {
  return ProbInterval(lower_prob(C, A), upper_prob(C, A));
}

std::vector<int> argmin_vertices(const CredalSet& C, const Event& A) {
  Rational lo = lower_prob(C, A);
  std::vector<int> out;
  for (int i = 0; i < C.vertex_count(); ++i)
    if (C.vertices()[i](A) == lo) out.push_back(i);
  return out;
}

std::vector<int> argmax_vertices(const CredalSet& C, const Event& A) {
  Rational hi = upper_prob(C, A);
  std::vector<int> out;
  for (int i = 0; i < C.vertex_count(); ++i)
    if (C.vertices()[i](A) == hi) out.push_back(i);
  return out;
}

}  // namespace constrict
