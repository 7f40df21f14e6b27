#include "constrict/capacity.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "constrict/errors.hpp"

namespace constrict {

namespace {

void require_dense_size(int n, const char* what) {
  if (n < 1)
    throw ValidationError(std::string(what) + " needs at least one atom");
  if (n > kMaxDenseAtoms)
    throw SizeError(std::string(what) + " over " + std::to_string(n) +
                    " atoms exceeds the dense cap of " +
                    std::to_string(kMaxDenseAtoms));
}

}  // namespace

SetFunction::SetFunction(int atom_count, std::vector<Rational> table)
    : n_(atom_count), table_(std::move(table)) {
  require_dense_size(n_, "set function");
  if (table_.size() != (1u << n_))
    throw ValidationError("set function table has " +
                          std::to_string(table_.size()) + " entries; expected " +
                          std::to_string(1u << n_));
}

SetFunction SetFunction::from_fn(int atom_count,
                                 const std::function<Rational(Event)>& fn) {
  require_dense_size(atom_count, "set function");
  std::vector<Rational> t;
  t.reserve(1u << atom_count);
  for (std::uint32_t mask = 0; mask < (1u << atom_count); ++mask)
    t.push_back(fn(Event(mask, atom_count)));
  return SetFunction(atom_count, std::move(t));
}

SetFunction SetFunction::lower_envelope(const CredalSet& C) {
  int n = C.atom_count();
  require_dense_size(n, "lower envelope");
  // accumulate P(mask) per vertex by the shared-subset recurrence, then min
  std::vector<Rational> best(1u << n, Rational(0));
  std::vector<Rational> cur(1u << n, Rational(0));
  for (int v = 0; v < C.vertex_count(); ++v) {
    const Measure& P = C.vertices()[v];
    cur[0] = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::uint32_t low = mask & (~mask + 1);
      cur[mask] = cur[mask ^ low] + P.weight(std::countr_zero(low));
    }
    if (v == 0)
      best = cur;
    else
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (cur[mask] < best[mask]) best[mask] = cur[mask];
  }
  return SetFunction(n, std::move(best));
}

SetFunction SetFunction::from_measure(const Measure& P) {
  int n = P.size();
  require_dense_size(n, "set function");
  std::vector<Rational> t(1u << n, Rational(0));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    t[mask] = t[mask ^ low] + P.weight(std::countr_zero(low));
  }
  return SetFunction(n, std::move(t));
}

SetFunction SetFunction::vacuous(int atom_count) {
  require_dense_size(atom_count, "set function");
  std::vector<Rational> t(1u << atom_count, Rational(0));
  t.back() = 1;
  return SetFunction(atom_count, std::move(t));
}

const Rational& SetFunction::operator()(const Event& A) const {
  if (A.universe_size() != n_)
    throw DomainMismatchError("event does not live on the set function's space");
  return table_[A.bits()];
}

SetFunction SetFunction::conjugate() const {
  std::uint32_t full = (1u << n_) - 1u;
  std::vector<Rational> t(table_.size());
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    t[mask] = 1 - table_[full ^ mask];
  return SetFunction(n_, std::move(t));
}

MassFunction::MassFunction(int atom_count,
                           std::map<std::uint32_t, Rational> masses)
    : n_(atom_count), masses_(std::move(masses)) {
  require_dense_size(n_, "mass function");
  for (auto it = masses_.begin(); it != masses_.end();) {
    if (it->second == 0)
      it = masses_.erase(it);
    else
      ++it;
  }
  Rational total = 0;
  for (const auto& [mask, m] : masses_) {
    if (mask == 0)
      throw ValidationError(
          "mass function property (a) violated: nonzero mass on the empty set");
    if (n_ < 32 && (mask >> n_) != 0)
      throw ValidationError("focal element outside the universe");
    total += m;
  }
  if (total != 1)
    throw ValidationError("mass function property (b) violated: total mass " +
                          to_string(total) + ", not 1");
}

MassFunction MassFunction::vacuous(int atom_count) {
  std::map<std::uint32_t, Rational> m;
  m[(1u << atom_count) - 1u] = 1;
  return MassFunction(atom_count, std::move(m));
}

MassFunction MassFunction::from_measure(const Measure& P) {
  std::map<std::uint32_t, Rational> m;
  for (int i = 0; i < P.size(); ++i)
    if (P.weight(i) != 0) m[1u << i] = P.weight(i);
  return MassFunction(P.size(), std::move(m));
}

Rational MassFunction::mass(const Event& A) const {
  if (A.universe_size() != n_)
    throw DomainMismatchError("event does not live on the mass function's space");
  auto it = masses_.find(A.bits());
  return it == masses_.end() ? Rational(0) : it->second;
}

bool MassFunction::all_nonnegative() const {
  for (const auto& [mask, m] : masses_)
    if (m < 0) return false;
  return true;
}

Rational MassFunction::belief(const Event& A) const {
  if (A.universe_size() != n_)
    throw DomainMismatchError("event does not live on the mass function's space");
  Rational s = 0;
  for (const auto& [mask, m] : masses_)
    if ((mask & ~A.bits()) == 0) s += m;
  return s;
}

Rational MassFunction::plausibility(const Event& A) const {
  if (A.universe_size() != n_)
    throw DomainMismatchError("event does not live on the mass function's space");
  Rational s = 0;
  for (const auto& [mask, m] : masses_)
    if (mask & A.bits()) s += m;
  return s;
}

ProbInterval MassFunction::interval(const Event& A) const {
  return ProbInterval(belief(A), plausibility(A));
}

MassFunction mobius_transform(const SetFunction& f) {
  int n = f.atom_count();
  if (f.at_mask(0) != 0)
    throw ValidationError("Möbius transform requires f(∅) = 0; got " +
                          to_string(f.at_mask(0)));
  if (f.at_mask((1u << n) - 1u) != 1)
    throw ValidationError("Möbius transform requires f(Ω) = 1; got " +
                          to_string(f.at_mask((1u << n) - 1u)));
  std::vector<Rational> t(1u << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) t[mask] = f.at_mask(mask);
  for (int i = 0; i < n; ++i)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (mask >> i & 1u) t[mask] -= t[mask ^ (1u << i)];
  std::map<std::uint32_t, Rational> m;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    if (t[mask] != 0) m[mask] = t[mask];
  return MassFunction(n, std::move(m));
}

SetFunction belief_from_mass(const MassFunction& m) {
  int n = m.atom_count();
  std::vector<Rational> t(1u << n, Rational(0));
  for (const auto& [mask, v] : m.focal()) t[mask] = v;
  for (int i = 0; i < n; ++i)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (mask >> i & 1u) t[mask] += t[mask ^ (1u << i)];
  return SetFunction(n, std::move(t));
}

bool is_capacity(const SetFunction& f) {
  int n = f.atom_count();
  std::uint32_t full = (1u << n) - 1u;
  if (f.at_mask(0) != 0 || f.at_mask(full) != 1) return false;
  // monotone iff adding any one atom never decreases the value
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask >> i & 1u) && f.at_mask(mask | (1u << i)) < f.at_mask(mask))
        return false;
  return true;
}

namespace {

constexpr unsigned long long kCollectionBudget = 20'000'000ULL;

unsigned long long binom_capped(unsigned long long n, int k) {
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kCollectionBudget * 4) return kCollectionBudget * 4;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

unsigned long long collection_count(int atom_count, int k) {
  unsigned long long total = 0;
  for (std::uint32_t mask = 0; mask < (1u << atom_count); ++mask) {
    unsigned long long subsets = 1ULL << std::popcount(mask);
    for (int j = 1; j <= k; ++j) {
      total += binom_capped(subsets, j);
      if (total > kCollectionBudget) return total;
    }
  }
  return total;
}

// Shared enumerator for the monotone and alternating checks. `dual` flips
// the role: supersets/unions/<= instead of subsets/intersections/>=.
MonotonicityResult check_order_k(const SetFunction& f, int k, bool dual) {
  if (k < 1) throw ValidationError("monotonicity order k must be >= 1");
  int n = f.atom_count();
  std::uint32_t full = (1u << n) - 1u;
  if (collection_count(n, k) > kCollectionBudget)
    throw SizeError("order-" + std::to_string(k) +
                    " check over " + std::to_string(n) +
                    " atoms exceeds the enumeration budget of " +
                    std::to_string(kCollectionBudget) + " collections");

  std::vector<std::uint32_t> family;
  std::vector<int> idx;
  for (std::uint32_t outer = 0; outer <= full; ++outer) {
    // family = subsets of outer (or supersets, via complement shift)
    family.clear();
    std::uint32_t space = dual ? (full ^ outer) : outer;
    for (std::uint32_t s = space;; s = (s - 1) & space) {
      family.push_back(dual ? (outer | s) : s);
      if (s == 0) break;
    }
    int fam = static_cast<int>(family.size());
    for (int j = 1; j <= std::min(k, fam); ++j) {
      idx.assign(j, 0);
      for (int i = 0; i < j; ++i) idx[i] = i;
      while (true) {
        // inclusion-exclusion over nonempty index subsets
        Rational rhs = 0;
        for (std::uint32_t sel = 1; sel < (1u << j); ++sel) {
          std::uint32_t comb = dual ? 0u : full;
          for (int i = 0; i < j; ++i)
            if (sel >> i & 1u) {
              if (dual)
                comb |= family[idx[i]];
              else
                comb &= family[idx[i]];
            }
          if (std::popcount(sel) % 2 == 1)
            rhs += f.at_mask(comb);
          else
            rhs -= f.at_mask(comb);
        }
        bool bad = dual ? (f.at_mask(outer) > rhs) : (f.at_mask(outer) < rhs);
        if (bad) {
          MonotonicityWitness w;
          w.outer = Event(outer, n);
          for (int i = 0; i < j; ++i)
            w.collection.push_back(Event(family[idx[i]], n));
          w.lhs = f.at_mask(outer);
          w.rhs = rhs;
          return MonotonicityResult{false, std::move(w)};
        }
        // next combination of j indices out of fam
        int pos = j - 1;
        while (pos >= 0 && idx[pos] == fam - j + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < j; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  return MonotonicityResult{true, std::nullopt};
}

}  // namespace

MonotonicityResult is_k_monotone(const SetFunction& f, int k) {
  return check_order_k(f, k, /*dual=*/false);
}

MonotonicityResult is_k_alternating(const SetFunction& f, int k) {
  return check_order_k(f, k, /*dual=*/true);
}

bool is_belief_function(const SetFunction& f) {
  if (!is_capacity(f)) return false;
  return mobius_transform(f).all_nonnegative();
}

bool compatible_contains(const SetFunction& f, const Measure& P) {
  int n = f.atom_count();
  if (P.size() != n)
    throw DomainMismatchError("measure does not live on the set function's space");
  std::vector<Rational> p(1u << n, Rational(0));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    p[mask] = p[mask ^ low] + P.weight(std::countr_zero(low));
    if (p[mask] < f.at_mask(mask)) return false;
  }
  return p[0] >= f.at_mask(0);
}

CredalSet core_vertices(const SetFunction& bel, const StateSpace& space) {
  constexpr int kMaxCoreAtoms = 8;
  int n = bel.atom_count();
  if (space.size() != n)
    throw DomainMismatchError("state space does not match the belief function");
  if (n > kMaxCoreAtoms)
    throw SizeError("core vertex enumeration over " + std::to_string(n) +
                    " atoms exceeds the ordering cap of " +
                    std::to_string(kMaxCoreAtoms) + " atoms");
  if (!is_capacity(bel))
    throw ValidationError("core vertices require a capacity");
  MassFunction m = mobius_transform(bel);
  if (!m.all_nonnegative())
    throw ValidationError("core vertices require a belief function "
                          "(nonnegative Möbius masses)");

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> rank(n);
  std::set<std::vector<Rational>> seen;
  do {
    for (int pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    std::vector<Rational> w(n, Rational(0));
    for (const auto& [mask, mv] : m.focal()) {
      int last = -1, last_rank = -1;
      for (int a = 0; a < n; ++a)
        if ((mask >> a & 1u) && rank[a] > last_rank) {
          last = a;
          last_rank = rank[a];
        }
      w[last] += mv;
    }
    seen.insert(std::move(w));
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Measure> vertices;
  vertices.reserve(seen.size());
  for (const auto& w : seen) vertices.emplace_back(w);
  return CredalSet(space, std::move(vertices));
}

CredalSet core_vertices(const SetFunction& bel) {
  return core_vertices(bel, StateSpace::with_default_labels(bel.atom_count()));
}

}  // namespace constrict
