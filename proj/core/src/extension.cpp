#include "constrict/extension.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "constrict/errors.hpp"

namespace constrict {

void validate_assessment(const Assessment& a) {
  int n = a.space.size();
  if (a.events.size() != a.probs.size())
    throw ValidationError("assessment lists " + std::to_string(a.events.size()) +
                          " events but " + std::to_string(a.probs.size()) +
                          " probabilities");
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    if (a.events[i].universe_size() != n)
      throw DomainMismatchError("assessment event " + std::to_string(i) +
                                " lives on a different space");
    if (a.probs[i] < 0 || a.probs[i] > 1)
      throw ValidationError("assessment probability " + to_string(a.probs[i]) +
                            " outside [0,1]");
  }
  if (a.target.universe_size() != n)
    throw DomainMismatchError("assessment target lives on a different space");
}

namespace {

LPProblem assessment_lp(const Assessment& a) {
  int n = a.space.size();
  LPProblem prob;
  prob.A.emplace_back(n, Rational(1));
  prob.b.push_back(1);
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    std::vector<Rational> row(n, Rational(0));
    for (int w : a.events[i].members()) row[w] = 1;
    prob.A.push_back(std::move(row));
    prob.b.push_back(a.probs[i]);
  }
  prob.c.assign(n, Rational(0));
  for (int w : a.target.members()) prob.c[w] = 1;
  return prob;
}

}  // namespace

DeFinettiResult definetti_bounds(const Assessment& a) {
  validate_assessment(a);
  LPProblem prob = assessment_lp(a);
  LPResult lo = lp_minimize(prob);
  DeFinettiResult res;
  if (lo.status != LPStatus::Optimal) return res;  // infeasible
  LPResult hi = lp_maximize(prob);
  res.feasible = true;
  res.bounds = ProbInterval(lo.objective, hi.objective);
  res.determined = lo.objective == hi.objective;
  return res;
}

Verdict definetti_select(const Assessment& a, const Rational& p) {
  DeFinettiResult r = definetti_bounds(a);
  if (!r.feasible)
    throw CoherenceError("the assessment is incoherent; no selection possible");
  if (r.determined)
    throw ValidationError("the target probability is determined at " +
                          to_string(r.bounds.lo) + "; there is nothing to select");
  if (p < r.bounds.lo || p > r.bounds.hi)
    throw CoherenceError("selected value " + to_string(p) + " lies outside [" +
                         to_string(r.bounds.lo) + ", " + to_string(r.bounds.hi) +
                         "]");
  return classify_uniform(r.bounds, ProbInterval(p, p));
}

namespace {

// Is target a convex combination of the given measures?
bool in_hull(const std::vector<Measure>& gens, const Measure& target) {
  if (gens.empty()) return false;
  int n = target.size();
  int k = static_cast<int>(gens.size());
  LPProblem prob;
  for (int w = 0; w < n; ++w) {
    std::vector<Rational> row(k);
    for (int j = 0; j < k; ++j) row[j] = gens[j].weight(w);
    prob.A.push_back(std::move(row));
    prob.b.push_back(target.weight(w));
  }
  prob.A.emplace_back(k, Rational(1));
  prob.b.push_back(1);
  prob.c.assign(k, Rational(0));
  return lp_minimize(prob).status == LPStatus::Optimal;
}

}  // namespace

CredalSet extreme_points(const CredalSet& C) {
  const auto& verts = C.vertices();
  std::vector<Measure> unique;
  for (const auto& v : verts) {
    bool seen = false;
    for (const auto& u : unique)
      if (u.weights() == v.weights()) {
        seen = true;
        break;
      }
    if (!seen) unique.push_back(v);
  }
  // A point is extreme exactly when it is outside the hull of the others, so
  // every non-extreme point can be dropped in one pass.
  std::vector<Measure> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<Measure> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (others.empty() || !in_hull(others, unique[i]))
      kept.push_back(unique[i]);
  }
  return CredalSet(C.space(), std::move(kept));
}

SelectionReport selection_classify(const CredalSet& C, const Measure& Pstar) {
  if (Pstar.size() != C.atom_count())
    throw DomainMismatchError("selected measure lives on a different space");
  CredalSet ex = extreme_points(C);
  int k = ex.vertex_count();
  if (k < 2)
    throw ValidationError(
        "selection classification needs at least two extreme points");
  int n = C.atom_count();

  // max t  s.t.  sum_j a_j V_j = P*, sum_j a_j = 1, a_j - t - s_j = 0,
  // everything nonnegative. Variables: a_1..a_k, t, s_1..s_k.
  LPProblem prob;
  int vars = 2 * k + 1;
  for (int w = 0; w < n; ++w) {
    std::vector<Rational> row(vars, Rational(0));
    for (int j = 0; j < k; ++j) row[j] = ex.vertices()[j].weight(w);
    prob.A.push_back(std::move(row));
    prob.b.push_back(Pstar.weight(w));
  }
  {
    std::vector<Rational> row(vars, Rational(0));
    for (int j = 0; j < k; ++j) row[j] = 1;
    prob.A.push_back(std::move(row));
    prob.b.push_back(1);
  }
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> row(vars, Rational(0));
    row[j] = 1;
    row[k] = -1;
    row[k + 1 + j] = -1;
    prob.A.push_back(std::move(row));
    prob.b.push_back(0);
  }
  prob.c.assign(vars, Rational(0));
  prob.c[k] = 1;
  LPResult sol = lp_maximize(prob);
  if (sol.status != LPStatus::Optimal)
    throw CoherenceError("the selected measure is not in the credal set");

  SelectionReport rep{ex, {}, sol.objective, sol.objective > 0, {}, {}, false};
  rep.weights.assign(sol.x.begin(), sol.x.begin() + k);

  std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Event A(mask, n);
    ProbInterval I = event_interval(ex, A);
    if (I.lo == I.hi) {
      rep.degenerate_events.push_back(A);
      continue;
    }
    Rational pv = Pstar(A);
    if (pv == I.lo || pv == I.hi) rep.weak_events.push_back(A);
  }
  rep.strict_for_all_nondegenerate = rep.weak_events.empty();
  return rep;
}

namespace {

double entropy_of(const std::vector<double>& p) {
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

}  // namespace

MaxEntResult maxent_select(const CredalSet& C) {
  const int k = C.vertex_count();
  const int n = C.atom_count();
  const auto& V = C.vertices();

  std::vector<Rational> alpha(k, Rational(1, static_cast<unsigned long>(k)));
  auto mix = [&](const std::vector<Rational>& a) {
    std::vector<Rational> p(n, Rational(0));
    for (int j = 0; j < k; ++j)
      for (int w = 0; w < n; ++w) p[w] += a[j] * V[j].weight(w);
    return p;
  };

  if (k == 1) {
    std::vector<double> pd(n);
    for (int w = 0; w < n; ++w) pd[w] = V[0].weight(w).get_d();
    return MaxEntResult{V[0], {Rational(1)}, entropy_of(pd), 0.0, false};
  }

  const double kGapTol = 1e-12;
  const long kGrid = 1L << 20;  // step sizes snap to this dyadic grid
  double gap = 0;
  // Pairwise steps (shift weight from the worst active vertex to the best
  // one) keep the convergence linear even when the optimum sits on a face,
  // and keep the weight denominators small since steps add instead of
  // rescaling.
  for (int iter = 0; iter < 200000; ++iter) {
    std::vector<Rational> p = mix(alpha);
    std::vector<double> pd(n);
    for (int w = 0; w < n; ++w) pd[w] = p[w].get_d();
    std::vector<double> grad(k, 0.0);
    for (int j = 0; j < k; ++j)
      for (int w = 0; w < n; ++w) {
        double vw = V[j].weight(w).get_d();
        if (vw > 0) grad[j] += vw * (-1.0 - std::log(std::max(pd[w], 1e-300)));
      }
    double base = 0;
    for (int j = 0; j < k; ++j) base += alpha[j].get_d() * grad[j];
    int best = 0, worst = -1;
    for (int j = 1; j < k; ++j)
      if (grad[j] > grad[best]) best = j;
    for (int j = 0; j < k; ++j)
      if (alpha[j] > 0 && (worst < 0 || grad[j] < grad[worst])) worst = j;
    gap = grad[best] - base;
    if (gap <= kGapTol) break;

    // Concave line search along p + g*(V_best - V_worst), g in [0, a_worst]:
    // bisect on the sign of the derivative.
    auto deriv = [&](double g) {
      double s = 0;
      for (int w = 0; w < n; ++w) {
        double diff = V[best].weight(w).get_d() - V[worst].weight(w).get_d();
        if (diff == 0) continue;
        double val = pd[w] + g * diff;
        s += diff * (-1.0 - std::log(std::max(val, 1e-300)));
      }
      return s;
    };
    double gmax = alpha[worst].get_d();
    Rational step;
    if (deriv(gmax) >= 0) {
      step = alpha[worst];  // drop the worst vertex entirely
    } else {
      double lo_g = 0, hi_g = gmax;
      for (int it = 0; it < 60; ++it) {
        double mid = (lo_g + hi_g) / 2;
        (deriv(mid) > 0 ? lo_g : hi_g) = mid;
      }
      long ticks = std::lround(lo_g * static_cast<double>(kGrid));
      if (ticks < 1) ticks = 1;
      step = Rational(ticks, kGrid);
      step.canonicalize();
      step.canonicalize();
      if (step > alpha[worst]) step = alpha[worst];
    }
    alpha[best] += step;
    alpha[worst] -= step;
  }

  std::vector<Rational> p = mix(alpha);
  std::vector<double> pd(n);
  for (int w = 0; w < n; ++w) pd[w] = p[w].get_d();
  return MaxEntResult{Measure(p), alpha, entropy_of(pd), gap, true};
}

Measure convex_pool(const std::vector<Measure>& measures,
                    const std::vector<Rational>& weights) {
  if (measures.empty()) throw ValidationError("nothing to pool");
  if (measures.size() != weights.size())
    throw ValidationError("pool has " + std::to_string(measures.size()) +
                          " measures but " + std::to_string(weights.size()) +
                          " weights");
  int n = measures.front().size();
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw ValidationError("negative pooling weight " + to_string(w));
    total += w;
  }
  if (total != 1)
    throw ValidationError("pooling weights sum to " + to_string(total) +
                          ", not 1");
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t j = 0; j < measures.size(); ++j) {
    if (measures[j].size() != n)
      throw DomainMismatchError("pooled measures live on different spaces");
    for (int w = 0; w < n; ++w) out[w] += weights[j] * measures[j].weight(w);
  }
  return Measure(out);
}

HalmosResult halmos_extension(const Measure& mu,
                              const std::vector<Measure>& kernels,
                              const Event& A,
                              const std::vector<Event>& subalgebra) {
  if (static_cast<int>(kernels.size()) != mu.size())
    throw ValidationError("need exactly one kernel per point of the base space");
  if (kernels.empty()) throw ValidationError("empty base space");
  int ny = kernels.front().size();
  for (const auto& nu : kernels)
    if (nu.size() != ny)
      throw DomainMismatchError("kernels live on different spaces");
  if (A.universe_size() != ny)
    throw DomainMismatchError("target set lives on a different space");

  std::uint32_t full = (ny >= 32) ? ~0u : ((1u << ny) - 1u);
  std::vector<std::uint32_t> alg;
  for (const auto& B : subalgebra) {
    if (B.universe_size() != ny)
      throw DomainMismatchError("subalgebra member lives on a different space");
    alg.push_back(B.bits());
  }
  std::sort(alg.begin(), alg.end());
  alg.erase(std::unique(alg.begin(), alg.end()), alg.end());
  auto has = [&](std::uint32_t m) {
    return std::binary_search(alg.begin(), alg.end(), m);
  };
  if (!has(0) || !has(full))
    throw ValidationError("subalgebra must contain the empty set and the "
                          "whole space");
  for (std::uint32_t m : alg) {
    if (!has(full ^ m))
      throw ValidationError("subalgebra is not closed under complement");
    for (std::uint32_t m2 : alg)
      if (!has(m | m2))
        throw ValidationError("subalgebra is not closed under union");
  }

  HalmosResult res;
  res.trivial = has(A.bits());
  res.pi = 0;
  res.inner = 0;
  res.outer = 0;
  for (int x = 0; x < mu.size(); ++x) {
    const Measure& nu = kernels[x];
    res.pi += mu.weight(x) * nu(A);
    Rational best_in = 0, best_out = 1;
    for (std::uint32_t m : alg) {
      Event B(m, ny);
      if ((m & ~A.bits()) == 0) best_in = std::max(best_in, nu(B));
      if ((A.bits() & ~m) == 0) best_out = std::min(best_out, nu(B));
    }
    res.inner += mu.weight(x) * best_in;
    res.outer += mu.weight(x) * best_out;
  }
  res.ok = res.inner <= res.pi && res.pi <= res.outer;
  return res;
}

}  // namespace constrict
