// Acceptance gate: one line per criterion, exit code = number of failures.
// Every tolerance is pinned here in code; the only non-exact comparisons are
// the two explicitly labelled 1e-12 iteration cutoffs.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "constrict/analysis.hpp"
#include "constrict/campaigns.hpp"
#include "constrict/capacity.hpp"
#include "constrict/errors.hpp"
#include "constrict/extension.hpp"
#include "constrict/model.hpp"
#include "constrict/model_io.hpp"
#include "constrict/pooling.hpp"
#include "constrict/random_gen.hpp"
#include "constrict/rational.hpp"
#include "constrict/updating.hpp"

using namespace constrict;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome pass(std::string d) { return {true, std::move(d)}; }
Outcome fail(std::string d) { return {false, std::move(d)}; }

std::string istr(const ProbInterval& I) {
  return "[" + to_string(I.lo) + ", " + to_string(I.hi) + "]";
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ------------------------------------------------------------ criterion 1

Outcome run_coin_example() {
  auto t0 = std::chrono::steady_clock::now();
  ModelFile mf = load_model(fixture("coin.json"));
  Event A = mf.events.at("H2");
  Partition part = mf.partitions.at("first_toss");
  PartitionReport rep =
      classify_partition(mf.state(), A, part, UpdateRule::Bayes);

  if (!(rep.prior == ProbInterval{Rational(1, 2), Rational(1, 2)}))
    return fail("prior " + istr(rep.prior) + ", expected [1/2, 1/2]");
  if (rep.blocks.size() != 2) return fail("expected 2 blocks");
  for (const BlockOutcome& b : rep.blocks) {
    if (!(b.interval == ProbInterval{Rational(0), Rational(1)}))
      return fail("block interval " + istr(b.interval) + ", expected [0, 1]");
    if (b.kind != VerdictKind::StrictDilation)
      return fail("block verdict " + kind_name(b.kind));
  }
  if (rep.uniform.kind != VerdictKind::StrictDilation)
    return fail("uniform verdict " + kind_name(rep.uniform.kind));
  double dt = seconds_since(t0);
  if (dt >= 1.0) return fail("took " + std::to_string(dt) + " s, limit 1 s");
  return pass("prior [1/2, 1/2], both conditioned intervals [0, 1], "
              "strict dilation on each block");
}

// ------------------------------------------------------------ criterion 2

Outcome run_bayes_pointwise() {
  auto t0 = std::chrono::steady_clock::now();
  CampaignResult res = check_bayes_pointwise(2024, 500);
  double dt = seconds_since(t0);
  if (res.violations != 0)
    return fail(std::to_string(res.violations) + " violations in " +
                std::to_string(res.checked) + " checks; first: " +
                (res.notes.empty() ? "?" : res.notes.front()));
  if (res.trials != 500)
    return fail("only " + std::to_string(res.trials) + " of 500 instances");
  if (dt >= 60.0) return fail("took " + std::to_string(dt) + " s, limit 60 s");
  return pass("500 instances, " + std::to_string(res.checked) +
              " pointwise checks, 0 constriction verdicts");
}

// ------------------------------------------------------------ criterion 3

Outcome run_envelope_bounds() {
  CampaignResult res = check_envelope_bounds(2024, 500);
  long bayes = res.counters.count("bayes_violations")
                   ? res.counters.at("bayes_violations")
                   : 0;
  long geom = res.counters.count("geometric_violations")
                  ? res.counters.at("geometric_violations")
                  : 0;
  if (res.violations == 0)
    return pass("both rules kept the block bounds outside the prior bounds "
                "on all " +
                std::to_string(res.trials) + " instances");
  if (bayes > 0)
    return fail("unexpected failures under the Bayes rule: " +
                std::to_string(bayes));
  return fail(
      "bayes: 0 violations; geometric: " + std::to_string(geom) +
      " violations in " + std::to_string(res.checked) +
      " checks. The inf/sup block bound is false for the geometric rule on "
      "lower envelopes that are not 2-monotone; README has a 2-vertex "
      "counterexample. First sampled witness: " +
      (res.notes.empty() ? "?" : res.notes.front()));
}

// ------------------------------------------------------------ criterion 4

Outcome run_mobius_round_trip() {
  Rng rng(4242);
  for (int t = 0; t < 1000; ++t) {
    int n = rng.uniform_int(2, 5);
    SetFunction f = random_set_function(rng, n);
    if (belief_from_mass(mobius_transform(f)) != f)
      return fail("set function -> signed mass -> set function mismatch at "
                  "trial " +
                  std::to_string(t));
  }
  for (int t = 0; t < 1000; ++t) {
    int n = rng.uniform_int(2, 5);
    MassFunction m = random_mass(rng, n, 6);
    if (mobius_transform(belief_from_mass(m)) != m)
      return fail("mass -> belief -> mass mismatch at trial " +
                  std::to_string(t));
  }
  return pass("1000 set functions and 1000 masses, exact round trips both "
              "ways");
}

// ------------------------------------------------------------ criterion 5

Outcome run_dichotomy() {
  CampaignResult res = check_dichotomy(7, 200);
  long dil = res.counters.count("dilation_instances")
                 ? res.counters.at("dilation_instances")
                 : 0;
  if (res.violations != 0)
    return fail(std::to_string(res.violations) + " violations; first: " +
                (res.notes.empty() ? "?" : res.notes.front()));
  if (dil < 5)
    return fail("only " + std::to_string(dil) +
                " strict dilation instances; need at least 5");
  return pass(std::to_string(res.checked) + " event/evidence pairs, " +
              std::to_string(dil) +
              " strict dilations, each met by strict constriction under the "
              "other rule");
}

// ------------------------------------------------------------ criterion 6

Outcome run_imaging_iff() {
  CampaignResult res = check_imaging_iff(2024, 200);
  if (res.violations != 0)
    return fail(std::to_string(res.violations) + " violations; first: " +
                (res.notes.empty() ? "?" : res.notes.front()));
  if (res.trials != 200)
    return fail("only " + std::to_string(res.trials) + " of 200 triples");
  long strict = res.counters.count("strict_constrictions")
                    ? res.counters.at("strict_constrictions")
                    : 0;
  return pass("200 (mass, transfer, event) triples; positive sums and strict "
              "constriction coincided every time (" +
              std::to_string(strict) + " strict cases)");
}

// ------------------------------------------------------------ criterion 7

Outcome run_forgetting() {
  CampaignResult res = check_forgetting(2024, 200);
  if (res.violations != 0)
    return fail(std::to_string(res.violations) + " violations; first: " +
                (res.notes.empty() ? "?" : res.notes.front()));
  long attempts =
      res.counters.count("attempts") ? res.counters.at("attempts") : 0;
  return pass("200 condition-holding instances (rejection sampled from " +
              std::to_string(attempts) +
              " attempts), forgetting strictly constricted in every one");
}

// ------------------------------------------------------------ criterion 8

// Exact Gauss-Jordan elimination. Returns 0 with the unique solution in x,
// 1 when inconsistent, 2 when underdetermined.
int solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                std::vector<Rational>& x) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return 1;
  if (static_cast<int>(pivot_cols.size()) < cols) return 2;
  x.assign(cols, Rational(0));
  for (int k = 0; k < cols; ++k) x[pivot_cols[k]] = b[k] / A[k][pivot_cols[k]];
  return 0;
}

struct OracleBounds {
  bool feasible = false;
  Rational lo, hi;
};

// Brute force over candidate polytope vertices: every vertex of
// {p >= 0, p(e_i) = q_i, sum p = 1} has support of size at most
// (#constraints), so solving the equality system on each small support and
// keeping the nonnegative solutions covers all vertices exactly.
OracleBounds oracle_definetti(const Assessment& a) {
  const int n = a.space.size();
  const int m = static_cast<int>(a.events.size());
  OracleBounds out;
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t support = 1; support <= full; ++support) {
    if (std::popcount(support) > m + 1) continue;
    std::vector<int> idx;
    for (int t = 0; t < n; ++t)
      if (support & (1u << t)) idx.push_back(t);
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int e = 0; e < m; ++e) {
      std::vector<Rational> row;
      for (int t : idx)
        row.push_back(Rational((a.events[e].bits() >> t) & 1u));
      A.push_back(std::move(row));
      b.push_back(a.probs[e]);
    }
    A.emplace_back(idx.size(), Rational(1));
    b.push_back(Rational(1));
    std::vector<Rational> x;
    if (solve_exact(A, b, x) != 0) continue;
    bool nonneg = true;
    for (const Rational& v : x)
      if (v < 0) {
        nonneg = false;
        break;
      }
    if (!nonneg) continue;
    Rational val = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if ((a.target.bits() >> idx[k]) & 1u) val += x[k];
    if (!out.feasible) {
      out.feasible = true;
      out.lo = out.hi = val;
    } else {
      if (val < out.lo) out.lo = val;
      if (val > out.hi) out.hi = val;
    }
  }
  return out;
}

Outcome run_definetti_oracle() {
  Assessment fx = load_assessment(fixture("assessment_ab.json"));
  DeFinettiResult fres = definetti_bounds(fx);
  if (!fres.feasible ||
      !(fres.bounds == ProbInterval{Rational(1, 2), Rational(9, 10)}))
    return fail("fixture bounds " + istr(fres.bounds) +
                ", expected [1/2, 9/10]");

  Rng rng(808);
  int infeasible = 0;
  for (int t = 0; t < 50; ++t) {
    int n = rng.uniform_int(3, 5);
    int m = rng.uniform_int(1, 4);
    Assessment a{StateSpace::with_default_labels(n), {}, {}, Event::empty(n)};
    bool coherent = rng.uniform_int(0, 2) > 0;
    Measure P = random_measure(rng, n, false);
    for (int e = 0; e < m; ++e) {
      Event ev = random_event(rng, n);
      a.events.push_back(ev);
      a.probs.push_back(coherent ? P(ev) : rng.uniform_fraction(20));
    }
    a.target = random_event(rng, n);
    DeFinettiResult lp = definetti_bounds(a);
    OracleBounds oracle = oracle_definetti(a);
    if (lp.feasible != oracle.feasible)
      return fail("trial " + std::to_string(t) +
                  ": feasibility disagrees with the oracle");
    if (!lp.feasible) {
      ++infeasible;
      continue;
    }
    if (!(lp.bounds.lo == oracle.lo && lp.bounds.hi == oracle.hi))
      return fail("trial " + std::to_string(t) + ": bounds " +
                  istr(lp.bounds) + " vs oracle [" + to_string(oracle.lo) +
                  ", " + to_string(oracle.hi) + "]");
    if (lp.determined != (oracle.lo == oracle.hi))
      return fail("trial " + std::to_string(t) + ": determined flag wrong");
  }
  return pass("fixture [1/2, 9/10]; 50 random assessments match the "
              "support-enumeration oracle exactly (" +
              std::to_string(infeasible) + " incoherent)");
}

// ------------------------------------------------------------ criterion 9

Outcome run_selection() {
  Rng rng(909);
  int weak_hits = 0;
  for (int t = 0; t < 100; ++t) {
    int n = rng.uniform_int(3, 5);
    StateSpace space = StateSpace::with_default_labels(n);
    CredalSet C =
        random_credal_set(rng, space, rng.uniform_int(2, 6), false);

    std::vector<Rational> w;
    Rational total = 0;
    for (int j = 0; j < C.vertex_count(); ++j) {
      Rational v(rng.uniform_int(1, 10));
      w.push_back(v);
      total += v;
    }
    for (Rational& v : w) v /= total;
    Measure inside = convex_pool(C.vertices(), w);
    SelectionReport rep = selection_classify(C, inside);
    if (!rep.strictly_inside || !rep.weak_events.empty() ||
        !rep.strict_for_all_nondegenerate)
      return fail("trial " + std::to_string(t) +
                  ": positive mixture not strict everywhere");
    const std::uint32_t top = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask < top; ++mask) {
      Event A(mask, n);
      Rational lo = lower_prob(C, A), hi = upper_prob(C, A);
      if (lo == hi) continue;
      Rational p = inside(A);
      if (!(lo < p && p < hi))
        return fail("trial " + std::to_string(t) + ": event value " +
                    to_string(p) + " touches [" + to_string(lo) + ", " +
                    to_string(hi) + "]");
    }

    CredalSet ext = rep.extremes;
    int k = rng.uniform_int(0, ext.vertex_count() - 1);
    Measure corner = ext.vertices()[k];
    SelectionReport rep0 = selection_classify(C, corner);
    for (std::uint32_t mask = 1; mask < top; ++mask) {
      Event A(mask, n);
      Rational lo = lower_prob(C, A), hi = upper_prob(C, A);
      if (lo == hi) continue;
      Rational p = corner(A);
      if (p == lo || p == hi) {
        ++weak_hits;
        bool listed = false;
        for (const Event& e : rep0.weak_events)
          if (e == A) {
            listed = true;
            break;
          }
        if (!listed)
          return fail("trial " + std::to_string(t) +
                      ": bound-attaining event missing from the weak list");
      }
    }
    if (ext.vertex_count() >= 2 && rep0.strictly_inside)
      return fail("trial " + std::to_string(t) +
                  ": an extreme point cannot be strictly inside");
  }
  return pass("100 credal sets: interior mixtures strict on every "
              "nondegenerate event; " +
              std::to_string(weak_hits) +
              " bound-attaining events all classified weak");
}

// ----------------------------------------------------------- criterion 10

Outcome run_degroot() {
  WeightMatrix W({{Rational(1, 2), Rational(1, 2)},
                  {Rational(1, 4), Rational(3, 4)}});
  StationaryResult st = stationary_vector(W);
  if (!st.unique || st.pi != std::vector<Rational>{Rational(1, 3),
                                                   Rational(2, 3)})
    return fail("fixture stationary vector wrong");

  // 1e-12 is the pinned iteration cutoff; the comparison itself is exact
  // rational arithmetic.
  const Rational tol = parse_rational("1/1000000000000");
  Rng rng(1010);
  for (int t = 0; t < 100; ++t) {
    int k = rng.uniform_int(2, 5);
    int n = rng.uniform_int(2, 4);
    WeightMatrix M(random_positive_stochastic(rng, k));
    OpinionProfile F{StateSpace::with_default_labels(n), {}};
    for (int i = 0; i < k; ++i)
      F.opinions.push_back(random_measure(rng, n, false));
    Event A = random_event(rng, n);

    NestingTrace tr = nesting_trace(M, F, A, 12);
    if (!tr.weakly_nested)
      return fail("trial " + std::to_string(t) + ": nesting violated");

    StationaryResult s = stationary_vector(M);
    if (!s.unique)
      return fail("trial " + std::to_string(t) +
                  ": positive matrix without a unique stationary vector");
    Measure lim = consensus_limit(M, F);
    OpinionProfile G = F;
    for (int step = 0; step < 64; ++step) G = degroot_step(M, G);
    for (const Measure& op : G.opinions)
      for (int atom = 0; atom < n; ++atom) {
        Rational d = op.weight(atom) - lim.weight(atom);
        if (d < 0) d = -d;
        if (d > tol)
          return fail("trial " + std::to_string(t) +
                      ": iterate 64 misses the consensus limit by " +
                      to_string(d));
      }
  }
  return pass("fixture stationary vector (1/3, 2/3); 100 positive matrices: "
              "traces weakly nested, iterate 64 within 1e-12 of the limit");
}

// ----------------------------------------------------------- criterion 11

Outcome run_open_set() {
  OpenSetReport rep = open_set_demo(
      {Rational(9, 20), Rational(1, 2), Rational(11, 20)}, 16);
  if (rep.q.size() != 16) return fail("expected 16 enumerated rationals");
  if (!(rep.q_inf == Rational(7, 17) && rep.q_sup == Rational(7, 12)))
    return fail("inf/sup " + to_string(rep.q_inf) + "/" +
                to_string(rep.q_sup) + ", expected 7/17 and 7/12");
  if (!(Rational(2, 5) < rep.q_inf && rep.q_sup < Rational(3, 5)))
    return fail("inf/sup not strictly inside (2/5, 3/5)");
  if (!rep.all_feasible || !rep.posteriors_exact || !rep.inside_open_interval)
    return fail("report flags not all set");
  if (rep.points.size() != 3) return fail("expected 3 grid points");
  for (const OpenSetPoint& p : rep.points) {
    if (!p.feasible) return fail("grid point " + to_string(p.x) + " infeasible");
    for (std::size_t i = 0; i < rep.q.size(); ++i) {
      // independent recomputation of the posterior from the two conditionals
      Rational num = p.x * p.given_a[i];
      Rational den = num + (1 - p.x) * p.given_not_a[i];
      if (den == 0 || num / den != rep.q[i] || p.posterior[i] != rep.q[i])
        return fail("posterior after outcome " + std::to_string(i + 1) +
                    " at x = " + to_string(p.x) + " is not exactly " +
                    to_string(rep.q[i]));
    }
  }
  return pass("all 3 grid priors realize every enumerated posterior exactly; "
              "inf 7/17 and sup 7/12 stay strictly inside (2/5, 3/5)");
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "coin example reproduced exactly", run_coin_example},
      {2, "bayes never constricts on every block at once", run_bayes_pointwise},
      {3, "block envelope bounds bracket the prior bounds", run_envelope_bounds},
      {4, "mobius round trips are exact", run_mobius_round_trip},
      {5, "geometric dilation meets dempster constriction", run_dichotomy},
      {6, "imaging constricts iff both mass sums rise", run_imaging_iff},
      {7, "forgetting under the witness condition constricts", run_forgetting},
      {8, "coherent bounds equal the vertex oracle", run_definetti_oracle},
      {9, "interior selections strict, extreme selections weak", run_selection},
      {10, "weighted averaging: stationary vector and nesting", run_degroot},
      {11, "posteriors fill a dense subset of the open interval", run_open_set},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    if (!out.pass) ++failures;
    std::printf("criterion %2d: %s (%.2f s) %s - %s\n", c.id,
                out.pass ? "PASS" : "FAIL", dt, c.title.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
