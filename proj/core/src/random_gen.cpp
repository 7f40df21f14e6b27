#include "constrict/random_gen.hpp"

#include "constrict/errors.hpp"

namespace constrict {

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw ValidationError("empty integer range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Rational Rng::uniform_fraction(int denom) {
  if (denom < 1) throw ValidationError("need a positive denominator");
  Rational q(uniform_int(0, denom), static_cast<unsigned long>(denom));
  q.canonicalize();
  return q;
}

Measure random_measure(Rng& rng, int n, bool strictly_positive) {
  std::vector<Rational> w(n);
  Rational total = 0;
  while (total == 0) {
    total = 0;
    for (int i = 0; i < n; ++i) {
      w[i] = rng.uniform_int(strictly_positive ? 1 : 0, 20);
      total += w[i];
    }
  }
  for (auto& v : w) v /= total;
  return Measure(w);
}

CredalSet random_credal_set(Rng& rng, const StateSpace& space, int vertices,
                            bool strictly_positive) {
  std::vector<Measure> v;
  v.reserve(vertices);
  for (int i = 0; i < vertices; ++i)
    v.push_back(random_measure(rng, space.size(), strictly_positive));
  return CredalSet(space, std::move(v));
}

Event random_event(Rng& rng, int n) {
  std::uint32_t full = (1u << n) - 1u;
  if (full < 2)
    throw ValidationError("no proper nonempty subsets on one atom");
  std::uint32_t mask = 0;
  while (mask == 0 || mask == full)
    mask = static_cast<std::uint32_t>(rng.next_u64()) & full;
  return Event(mask, n);
}

Partition random_partition(Rng& rng, int n) {
  int want = rng.uniform_int(2, std::min(n, 4));
  std::vector<std::uint32_t> masks;
  while (true) {
    masks.assign(want, 0u);
    for (int a = 0; a < n; ++a) masks[rng.uniform_int(0, want - 1)] |= 1u << a;
    bool ok = true;
    for (auto m : masks)
      if (m == 0) ok = false;
    if (ok) break;
  }
  std::vector<Event> blocks;
  blocks.reserve(masks.size());
  for (auto m : masks) blocks.emplace_back(m, n);
  return validate_partition(n, blocks);
}

MassFunction random_mass(Rng& rng, int n, int max_focal) {
  std::uint32_t full = (1u << n) - 1u;
  int count = rng.uniform_int(1, max_focal);
  std::map<std::uint32_t, Rational> m;
  Rational total = 0;
  for (int i = 0; i < count; ++i) {
    std::uint32_t mask = 0;
    while (mask == 0) mask = static_cast<std::uint32_t>(rng.next_u64()) & full;
    Rational w(rng.uniform_int(1, 10));
    m[mask] += w;
    total += w;
  }
  for (auto& [mask, v] : m) v /= total;
  return MassFunction(n, std::move(m));
}

MassFunction random_cross_mass(Rng& rng, int n) {
  if (n < 3) throw ValidationError("cross mass needs at least three atoms");
  std::uint32_t full = (1u << n) - 1u;
  int pairs = rng.uniform_int(2, 4);
  std::map<std::uint32_t, Rational> m;
  Rational total = 0;
  for (int i = 0; i < pairs; ++i) {
    int a = rng.uniform_int(0, n - 1);
    int b = a;
    while (b == a) b = rng.uniform_int(0, n - 1);
    Rational w(rng.uniform_int(1, 10));
    m[(1u << a) | (1u << b)] += w;
    total += w;
  }
  if (rng.uniform_int(0, 1)) {
    Rational w(rng.uniform_int(1, 5));
    m[full] += w;
    total += w;
  }
  for (auto& [mask, v] : m) v /= total;
  return MassFunction(n, std::move(m));
}

SetFunction random_set_function(Rng& rng, int n) {
  std::vector<Rational> t(1u << n);
  t[0] = 0;
  for (std::uint32_t mask = 1; mask < (1u << n) - 1u; ++mask)
    t[mask] = rng.uniform_fraction(64);
  t[(1u << n) - 1u] = 1;
  return SetFunction(n, std::move(t));
}

TransferFunction random_transfer(Rng& rng, int n, const Event& evidence) {
  std::uint32_t full = (1u << n) - 1u;
  std::uint32_t e = evidence.bits();
  if (e == 0) throw ValidationError("evidence must be nonempty");
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> cols;
  for (std::uint32_t x = 1; x <= full; ++x) {
    // a few random targets that meet the evidence, with random positive
    // weights, normalized
    int picks = rng.uniform_int(1, 3);
    std::map<std::uint32_t, Rational> col;
    Rational total = 0;
    for (int i = 0; i < picks; ++i) {
      std::uint32_t b = 0;
      while ((b & e) == 0) b = static_cast<std::uint32_t>(rng.next_u64()) & full;
      Rational w(rng.uniform_int(1, 6));
      col[b] += w;
      total += w;
    }
    for (auto& [b, v] : col) v /= total;
    cols[x] = std::move(col);
  }
  return TransferFunction(n, evidence, std::move(cols));
}

std::vector<std::vector<Rational>> random_positive_stochastic(Rng& rng, int k) {
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
  Rational half(1, 2);
  Rational unif(1, static_cast<unsigned long>(k));
  for (int i = 0; i < k; ++i) {
    Rational total = 0;
    std::vector<Rational> raw(k);
    for (int j = 0; j < k; ++j) {
      raw[j] = rng.uniform_int(0, 10);
      total += raw[j];
    }
    if (total == 0) {
      raw[i] = 1;
      total = 1;
    }
    for (int j = 0; j < k; ++j)
      rows[i][j] = half * (raw[j] / total) + half * unif;
  }
  return rows;
}

}  // namespace constrict
