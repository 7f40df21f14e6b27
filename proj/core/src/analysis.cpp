#include "constrict/analysis.hpp"

#include <algorithm>

#include "constrict/errors.hpp"

namespace constrict {

std::string kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::StrictConstriction: return "strict-constriction";
    case VerdictKind::WeakConstriction: return "weak-constriction";
    case VerdictKind::StrictDilation: return "strict-dilation";
    case VerdictKind::WeakDilation: return "weak-dilation";
    case VerdictKind::Neither: return "neither";
  }
  return "?";
}

std::string scope_name(VerdictScope s) {
  switch (s) {
    case VerdictScope::Uniform: return "uniform";
    case VerdictScope::Pointwise: return "pointwise";
    case VerdictScope::MerelyPointwise: return "merely-pointwise";
    case VerdictScope::SingleEvidence: return "single-evidence";
  }
  return "?";
}

Verdict classify_uniform(const ProbInterval& before, const ProbInterval& after) {
  Verdict v;
  v.before = before;
  v.after = after;
  const bool lo_in = after.lo > before.lo;
  const bool hi_in = after.hi < before.hi;
  const bool lo_out = after.lo < before.lo;
  const bool hi_out = after.hi > before.hi;
  const bool lo_eq = !lo_in && !lo_out;
  const bool hi_eq = !hi_in && !hi_out;
  if (lo_in && hi_in)
    v.kind = VerdictKind::StrictConstriction;
  else if ((lo_in && hi_eq) || (lo_eq && hi_in))
    v.kind = VerdictKind::WeakConstriction;
  else if (lo_out && hi_out)
    v.kind = VerdictKind::StrictDilation;
  else if ((lo_out && hi_eq) || (lo_eq && hi_out))
    v.kind = VerdictKind::WeakDilation;
  else
    v.kind = VerdictKind::Neither;
  return v;
}

VerdictKind aggregate_pointwise(const std::vector<BlockOutcome>& blocks) {
  if (blocks.empty()) return VerdictKind::Neither;
  bool all_con = true, all_strict_con = true;
  bool all_dil = true, all_strict_dil = true;
  for (const auto& b : blocks) {
    if (b.kind != VerdictKind::StrictConstriction) all_strict_con = false;
    if (b.kind != VerdictKind::StrictConstriction &&
        b.kind != VerdictKind::WeakConstriction)
      all_con = false;
    if (b.kind != VerdictKind::StrictDilation) all_strict_dil = false;
    if (b.kind != VerdictKind::StrictDilation &&
        b.kind != VerdictKind::WeakDilation)
      all_dil = false;
  }
  if (all_strict_con) return VerdictKind::StrictConstriction;
  if (all_con) return VerdictKind::WeakConstriction;
  if (all_strict_dil) return VerdictKind::StrictDilation;
  if (all_dil) return VerdictKind::WeakDilation;
  return VerdictKind::Neither;
}

namespace {

ProbInterval geometric_interval(const SetFunction& posterior, const Event& A) {
  std::uint32_t full = (1u << posterior.atom_count()) - 1u;
  return ProbInterval(posterior.at_mask(A.bits()),
                      1 - posterior.at_mask(full ^ A.bits()));
}

}  // namespace

PartitionReport classify_partition(const BeliefState& state, const Event& A,
                                   const Partition& part, UpdateRule rule,
                                   const std::string& imaging_transfer) {
  int n = state_atom_count(state);
  if (A.universe_size() != n)
    throw DomainMismatchError("event lives on a different space");
  PartitionReport rep;
  rep.prior = state_interval(state, A);

  // Geometric conditioning of a credal set happens on its envelope table;
  // other combinations go through the state-level dispatcher.
  std::optional<SetFunction> envelope;
  if (rule == UpdateRule::Geometric)
    if (const auto* C = std::get_if<CredalSet>(&state))
      envelope = SetFunction::lower_envelope(*C);

  for (const Event& block : part.blocks()) {
    if (block.universe_size() != n)
      throw DomainMismatchError("partition lives on a different space");
    if (state_interval(state, block).hi == 0) {
      rep.skipped.push_back(block);
      continue;
    }
    ProbInterval after(0, 1);
    if (envelope) {
      after = geometric_interval(geometric_update(*envelope, block), A);
    } else {
      std::optional<TransferFunction> t;
      if (rule == UpdateRule::Imaging)
        t = TransferFunction::builtin(imaging_transfer, n, block);
      UpdateRecord r = apply_update(state, rule, block, t);
      after = state_interval(r.posterior, A);
    }
    BlockOutcome out;
    out.block = block;
    out.interval = after;
    out.kind = classify_uniform(rep.prior, after).kind;
    rep.blocks.push_back(std::move(out));
  }

  rep.pointwise = aggregate_pointwise(rep.blocks);
  if (!rep.blocks.empty()) {
    Rational lo = rep.blocks.front().interval.lo;
    Rational hi = rep.blocks.front().interval.hi;
    for (const auto& b : rep.blocks) {
      lo = std::min(lo, b.interval.lo);
      hi = std::max(hi, b.interval.hi);
    }
    rep.uniform = classify_uniform(rep.prior, ProbInterval(lo, hi));
    rep.uniform.scope = VerdictScope::Uniform;
    bool pw_constricts = rep.pointwise == VerdictKind::StrictConstriction ||
                         rep.pointwise == VerdictKind::WeakConstriction;
    rep.merely_pointwise =
        pw_constricts && lo == rep.prior.lo && hi == rep.prior.hi;
  } else {
    rep.uniform = classify_uniform(rep.prior, rep.prior);
    rep.uniform.scope = VerdictScope::Uniform;
  }
  return rep;
}

DependenceSign dependence(const Measure& P, const Event& A, const Event& B) {
  DependenceSign d;
  d.d = P(A & B) - P(A) * P(B);
  d.sign = d.d > 0 ? 1 : (d.d < 0 ? -1 : 0);
  return d;
}

BalanceReport lemma_balance_check(const Measure& P, const Event& A,
                                  const Partition& part) {
  int n = P.size();
  if (A.universe_size() != n)
    throw DomainMismatchError("event lives on a different space");
  std::uint32_t pos = 0, neg = 0;
  for (const Event& block : part.blocks()) {
    if (block.universe_size() != n)
      throw DomainMismatchError("partition lives on a different space");
    if (P(block) == 0) continue;
    Rational d = P(A & block) - P(A) * P(block);
    if (d > 0) pos |= block.bits();
    if (d < 0) neg |= block.bits();
  }
  BalanceReport rep;
  rep.positive_union = Event(pos, n);
  rep.negative_union = Event(neg, n);
  rep.prob_positive = P(rep.positive_union);
  rep.prob_negative = P(rep.negative_union);
  rep.ok = (rep.prob_positive > 0) == (rep.prob_negative > 0);
  return rep;
}

EnvelopeBoundReport envelope_bound_check(const CredalSet& C, const Event& A,
                                         const Partition& part,
                                         UpdateRule rule) {
  if (rule != UpdateRule::Bayes && rule != UpdateRule::Geometric)
    throw ValidationError(
        "envelope bound check applies to the Bayes and geometric rules");
  EnvelopeBoundReport rep;
  rep.prior = event_interval(C, A);
  std::optional<SetFunction> envelope;
  if (rule == UpdateRule::Geometric)
    envelope = SetFunction::lower_envelope(C);
  bool first = true;
  for (const Event& block : part.blocks()) {
    if (upper_prob(C, block) == 0) continue;
    ProbInterval after(0, 1);
    if (envelope)
      after = geometric_interval(geometric_update(*envelope, block), A);
    else
      after = event_interval(gen_bayes_update(C, block), A);
    if (first || after.lo < rep.inf_block_lower) rep.inf_block_lower = after.lo;
    if (first || after.hi > rep.sup_block_upper) rep.sup_block_upper = after.hi;
    first = false;
  }
  if (first)
    throw ValidationError("no block of the partition has positive probability");
  rep.lower_ok = rep.inf_block_lower <= rep.prior.lo;
  rep.upper_ok = rep.sup_block_upper >= rep.prior.hi;
  rep.ok = rep.lower_ok && rep.upper_ok;
  return rep;
}

ForgettingReport forgetting_condition(const CredalSet& restored, const Event& A,
                                      const Event& forgotten) {
  ForgettingReport rep;
  rep.argmin_vertices = argmin_vertices(restored, A);
  rep.argmax_vertices = argmax_vertices(restored, A);
  for (int idx : rep.argmin_vertices)
    if (dependence(restored.vertices()[idx], A, forgotten).sign < 0)
      rep.negative_witnesses.push_back(idx);
  for (int idx : rep.argmax_vertices)
    if (dependence(restored.vertices()[idx], A, forgotten).sign > 0)
      rep.positive_witnesses.push_back(idx);
  rep.holds =
      !rep.negative_witnesses.empty() && !rep.positive_witnesses.empty();
  rep.restored = event_interval(restored, A);
  rep.conditioned = event_interval(gen_bayes_update(restored, forgotten), A);
  rep.strict_constriction = rep.restored.lo > rep.conditioned.lo &&
                            rep.restored.hi < rep.conditioned.hi;
  return rep;
}

DichotomyReport geom_dempster_dichotomy(const SetFunction& bel, const Event& A,
                                        const Event& E) {
  int n = bel.atom_count();
  if (A.universe_size() != n || E.universe_size() != n)
    throw DomainMismatchError("events live on a different space");
  if (!is_belief_function(bel))
    throw ValidationError("dichotomy check requires a belief function");
  Event Ec = E.complement();
  if (bel(E) == 0 || bel(Ec) == 0)
    throw ConditioningError(
        "dichotomy check needs strictly positive lower probability on the "
        "evidence and on its complement");

  DichotomyReport rep;
  std::uint32_t full = (1u << n) - 1u;
  rep.prior = ProbInterval(bel(A), 1 - bel.at_mask(full ^ A.bits()));
  MassFunction m = mobius_transform(bel);
  for (const Event& block : {E, Ec}) {
    BlockOutcome g;
    g.block = block;
    g.interval = geometric_update(m, block).interval(A);
    g.kind = classify_uniform(rep.prior, g.interval).kind;
    rep.geometric_blocks.push_back(std::move(g));
    BlockOutcome d;
    d.block = block;
    d.interval = dempster_update(m, block).interval(A);
    d.kind = classify_uniform(rep.prior, d.interval).kind;
    rep.dempster_blocks.push_back(std::move(d));
  }
  rep.geometric = aggregate_pointwise(rep.geometric_blocks);
  rep.dempster = aggregate_pointwise(rep.dempster_blocks);
  bool g_dil = rep.geometric == VerdictKind::StrictDilation;
  bool d_dil = rep.dempster == VerdictKind::StrictDilation;
  bool g_con = rep.geometric == VerdictKind::StrictConstriction;
  bool d_con = rep.dempster == VerdictKind::StrictConstriction;
  rep.implication_ok = (!g_dil || d_con) && (!d_dil || g_con);
  return rep;
}

ImagingIffReport imaging_constriction_iff(const MassFunction& m,
                                          const TransferFunction& t,
                                          const Event& A) {
  if (A.universe_size() != m.atom_count())
    throw DomainMismatchError("event lives on a different space");
  if (m.belief(t.evidence()) == 0)
    throw ConditioningError("belief in the evidence is 0");
  MassFunction imaged = imaging_update(m, t);
  Event Ac = A.complement();
  ImagingIffReport rep;
  rep.sum_inside = imaged.belief(A) - m.belief(A);
  rep.sum_complement = imaged.belief(Ac) - m.belief(Ac);
  rep.sums_positive = rep.sum_inside > 0 && rep.sum_complement > 0;
  rep.before = m.interval(A);
  rep.after = imaged.interval(A);
  rep.verdict = classify_uniform(rep.before, rep.after).kind;
  rep.ok = rep.sums_positive ==
           (rep.verdict == VerdictKind::StrictConstriction);
  return rep;
}

LeviResult levi_neutral(const UpdateRecord& r, const Event& A) {
  if (r.rule != UpdateRule::Bayes && r.rule != UpdateRule::Geometric)
    throw ValidationError(
        "Levi-neutral reversal is defined for the Bayes and geometric rules");
  LeviResult res;
  res.update_verdict = classify_uniform(state_interval(r.prior, A),
                                        state_interval(r.posterior, A));
  res.triggered = res.update_verdict.kind == VerdictKind::StrictDilation ||
                  res.update_verdict.kind == VerdictKind::WeakDilation;
  if (res.triggered) {
    res.restored = r.prior;
    res.statement = std::string("(LN_") + rule_tag(r.rule) + ",E) ↫ A";
  } else {
    res.statement = "no dilation, neutrality not triggered";
  }
  return res;
}

std::vector<Rational> enumerate_rationals_in(const Rational& lo,
                                             const Rational& hi, int count) {
  if (!(lo < hi)) throw ValidationError("interval is empty");
  if (count < 1) throw ValidationError("need a positive count");
  std::vector<Rational> out;
  out.reserve(count);
  for (unsigned long den = 1; static_cast<int>(out.size()) < count; ++den) {
    if (den > 1000000UL)
      throw SizeError("rational enumeration ran past denominator 10^6");
    mpz_class d(den);
    Rational ld = lo * Rational(d);
    Rational hd = hi * Rational(d);
    mpz_class p, pmax;
    // smallest integer strictly above lo*den, largest strictly below hi*den
    mpz_fdiv_q(p.get_mpz_t(), ld.get_num().get_mpz_t(),
               ld.get_den().get_mpz_t());
    p += 1;
    mpz_cdiv_q(pmax.get_mpz_t(), hd.get_num().get_mpz_t(),
               hd.get_den().get_mpz_t());
    pmax -= 1;
    for (; p <= pmax && static_cast<int>(out.size()) < count; ++p) {
      Rational cand(p, d);
      cand.canonicalize();
      if (cand.get_den() == d) out.push_back(cand);
    }
  }
  return out;
}

OpenSetReport open_set_demo(const std::vector<Rational>& grid, int N) {
  if (N < 2) throw ValidationError("need at least two enumerated rationals");
  if (grid.empty()) throw ValidationError("empty grid");
  for (const auto& x : grid)
    if (x <= 0 || x >= 1)
      throw ValidationError("grid point " + to_string(x) +
                            " is not a probability in (0,1)");
  const Rational lo(2, 5), hi(3, 5);
  OpenSetReport rep;
  rep.q = enumerate_rationals_in(lo, hi, N);
  rep.q_inf = *std::min_element(rep.q.begin(), rep.q.end());
  rep.q_sup = *std::max_element(rep.q.begin(), rep.q.end());
  rep.inside_open_interval = rep.q_inf > lo && rep.q_sup < hi;

  rep.all_feasible = true;
  rep.posteriors_exact = true;
  for (const auto& x : grid) {
    OpenSetPoint pt;
    pt.x = x;
    // Likelihood ratios r_n forced by the target posterior q_n; outcome n
    // must be r_n times as likely under A as under the complement.
    std::vector<Rational> r(N);
    Rational dpos = 0, dneg = 0;  // excess mass above/below ratio 1
    std::vector<Rational> w(N);
    Rational two_n = 1;
    for (int n = 0; n < N; ++n) {
      two_n *= 2;
      w[n] = Rational(1) / two_n;
      r[n] = (rep.q[n] * (1 - x)) / ((1 - rep.q[n]) * x);
      if (r[n] > 1) dpos += (r[n] - 1) * w[n];
      if (r[n] < 1) dneg += (1 - r[n]) * w[n];
    }
    // The absorbing outcome stays uninformative (equal residual mass on both
    // sides), which forces the weighted ratio excesses to cancel. That needs
    // target values on both sides of x.
    pt.feasible = dpos > 0 && dneg > 0;
    if (!pt.feasible) {
      rep.all_feasible = false;
      rep.points.push_back(std::move(pt));
      continue;
    }
    std::vector<Rational> b(N);
    for (int n = 0; n < N; ++n) {
      if (r[n] > 1)
        b[n] = w[n] * dneg;
      else if (r[n] < 1)
        b[n] = w[n] * dpos;
      else
        b[n] = w[n] * (dpos + dneg) / 2;
    }
    Rational total = 0;
    for (const auto& v : b) total += v;
    Rational scale = Rational(1) / (2 * total);
    pt.given_a.resize(N + 1);
    pt.given_not_a.resize(N + 1);
    pt.posterior.resize(N);
    Rational sum_a = 0, sum_b = 0;
    for (int n = 0; n < N; ++n) {
      pt.given_not_a[n] = b[n] * scale;
      pt.given_a[n] = r[n] * pt.given_not_a[n];
      sum_a += pt.given_a[n];
      sum_b += pt.given_not_a[n];
      Rational joint_a = x * pt.given_a[n];
      Rational joint_b = (1 - x) * pt.given_not_a[n];
      pt.posterior[n] = joint_a / (joint_a + joint_b);
      if (pt.posterior[n] != rep.q[n]) rep.posteriors_exact = false;
    }
    pt.given_a[N] = 1 - sum_a;
    pt.given_not_a[N] = 1 - sum_b;
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

}  // namespace constrict
