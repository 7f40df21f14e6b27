#include "constrict/campaigns.hpp"

#include <algorithm>

#include "constrict/analysis.hpp"
#include "constrict/errors.hpp"
#include "constrict/random_gen.hpp"

namespace constrict {

namespace {

constexpr int kMaxNotes = 5;

void note(CampaignResult& res, const std::string& text) {
  if (static_cast<int>(res.notes.size()) < kMaxNotes) res.notes.push_back(text);
}

std::string interval_str(const ProbInterval& I) {
  return "[" + to_string(I.lo) + ", " + to_string(I.hi) + "]";
}

// Shared corpus for the Bayes/geometric partition campaigns: strictly
// positive vertices so every block of every partition is conditionable
// under both rules.
struct PartitionInstance {
  CredalSet C;
  Partition part;
};

PartitionInstance corpus_instance(Rng& rng, int trial) {
  int n = 3 + (trial % 3);
  StateSpace space = StateSpace::with_default_labels(n);
  int k = rng.uniform_int(2, 6);
  return PartitionInstance{random_credal_set(rng, space, k, true),
                           random_partition(rng, n)};
}

struct BlockTables {
  ProbInterval prior;
  std::vector<ProbInterval> blocks;
};

Rational upper_from_lower(const SetFunction& L, std::uint32_t mask) {
  std::uint32_t full = (1u << L.atom_count()) - 1u;
  return 1 - L.at_mask(full ^ mask);
}

}  // namespace

CampaignResult check_balance_lemma(std::uint64_t seed, int trials) {
  CampaignResult res;
  res.name = "lemma13";
  res.seed = seed;
  res.trials = trials;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = rng.uniform_int(3, 5);
    Measure P = random_measure(rng, n, false);
    Event A = random_event(rng, n);
    Partition part = random_partition(rng, n);
    BalanceReport rep = lemma_balance_check(P, A, part);
    ++res.checked;
    if (!rep.ok) {
      ++res.violations;
      note(res, "trial " + std::to_string(t) + ": charged sets unbalanced, P+=" +
                    to_string(rep.prob_positive) + " P-=" +
                    to_string(rep.prob_negative));
    }
  }
  return res;
}

namespace {

// Runs fn(trial, prior, per-block intervals, event mask) for every proper
// event of every corpus instance under the Bayes rule.
template <typename Fn>
void walk_bayes_corpus(std::uint64_t seed, int trials, Fn&& fn) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    PartitionInstance inst = corpus_instance(rng, t);
    int n = inst.C.atom_count();
    SetFunction L0 = SetFunction::lower_envelope(inst.C);
    std::vector<SetFunction> Lb;
    for (const Event& block : inst.part.blocks())
      Lb.push_back(
          SetFunction::lower_envelope(gen_bayes_update(inst.C, block)));
    std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      BlockTables tab;
      tab.prior = ProbInterval(L0.at_mask(mask), upper_from_lower(L0, mask));
      for (const auto& L : Lb)
        tab.blocks.emplace_back(L.at_mask(mask), upper_from_lower(L, mask));
      fn(t, tab, mask);
    }
  }
}

}  // namespace

CampaignResult check_bayes_uniform(std::uint64_t seed, int trials) {
  CampaignResult res;
  res.name = "prop14";
  res.seed = seed;
  res.trials = trials;
  walk_bayes_corpus(seed, trials, [&](int t, const BlockTables& tab,
                                      std::uint32_t mask) {
    Rational lo = tab.blocks.front().lo, hi = tab.blocks.front().hi;
    for (const auto& b : tab.blocks) {
      lo = std::min(lo, b.lo);
      hi = std::max(hi, b.hi);
    }
    VerdictKind k = classify_uniform(tab.prior, ProbInterval(lo, hi)).kind;
    ++res.checked;
    if (k == VerdictKind::StrictConstriction ||
        k == VerdictKind::WeakConstriction) {
      ++res.violations;
      note(res, "trial " + std::to_string(t) + " event mask " +
                    std::to_string(mask) + ": uniform " + kind_name(k) +
                    ", prior " + interval_str(tab.prior) + ", blocks " +
                    interval_str(ProbInterval(lo, hi)));
    }
  });
  return res;
}

CampaignResult check_bayes_pointwise(std::uint64_t seed, int trials) {
  CampaignResult res;
  res.name = "prop15";
  res.seed = seed;
  res.trials = trials;
  walk_bayes_corpus(seed, trials, [&](int t, const BlockTables& tab,
                                      std::uint32_t mask) {
    std::vector<BlockOutcome> outs;
    for (const auto& b : tab.blocks) {
      BlockOutcome o;
      o.interval = b;
      o.kind = classify_uniform(tab.prior, b).kind;
      outs.push_back(o);
    }
    VerdictKind k = aggregate_pointwise(outs);
    ++res.checked;
    if (k == VerdictKind::StrictConstriction ||
        k == VerdictKind::WeakConstriction) {
      ++res.violations;
      note(res, "trial " + std::to_string(t) + " event mask " +
                    std::to_string(mask) + ": pointwise " + kind_name(k) +
                    " under Bayes, prior " + interval_str(tab.prior));
    }
  });
  return res;
}

CampaignResult check_envelope_bounds(std::uint64_t seed, int trials) {
  CampaignResult res;
  res.name = "lemma46";
  res.seed = seed;
  res.trials = trials;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    PartitionInstance inst = corpus_instance(rng, t);
    int n = inst.C.atom_count();
    std::uint32_t full = (1u << n) - 1u;
    SetFunction L0 = SetFunction::lower_envelope(inst.C);
    std::vector<SetFunction> bayes, geom;
    for (const Event& block : inst.part.blocks()) {
      bayes.push_back(
          SetFunction::lower_envelope(gen_bayes_update(inst.C, block)));
      geom.push_back(geometric_update(L0, block));
    }
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      ProbInterval prior(L0.at_mask(mask), upper_from_lower(L0, mask));
      for (int rule = 0; rule < 2; ++rule) {
        const auto& tables = rule == 0 ? bayes : geom;
        const char* tag = rule == 0 ? "B" : "G";
        Rational inf_lo = tables.front().at_mask(mask);
        Rational sup_hi = upper_from_lower(tables.front(), mask);
        for (const auto& L : tables) {
          inf_lo = std::min(inf_lo, L.at_mask(mask));
          sup_hi = std::max(sup_hi, upper_from_lower(L, mask));
        }
        ++res.checked;
        bool ok = inf_lo <= prior.lo && sup_hi >= prior.hi;
        if (!ok) {
          ++res.violations;
          ++res.counters[rule == 0 ? "bayes_violations"
                                   : "geometric_violations"];
          note(res, "trial " + std::to_string(t) + " rule " + tag +
                        " event mask " + std::to_string(mask) +
                        ": inf block lower " + to_string(inf_lo) +
                        ", sup block upper " + to_string(sup_hi) +
                        ", prior " + interval_str(prior));
        }
      }
    }
  }
  return res;
}

CampaignResult check_forgetting(std::uint64_t seed, int needed) {
  CampaignResult res;
  res.name = "thm48";
  res.seed = seed;
  Rng rng(seed);
  int attempts = 0;
  const int cap = needed * 1000;
  while (res.trials < needed && attempts < cap) {
    ++attempts;
    int n = rng.uniform_int(3, 5);
    StateSpace space = StateSpace::with_default_labels(n);
    CredalSet C = random_credal_set(rng, space, rng.uniform_int(2, 6), true);
    Event A = random_event(rng, n);
    Event E = random_event(rng, n);
    ForgettingReport rep = forgetting_condition(C, A, E);
    if (!rep.holds) continue;
    ++res.trials;
    ++res.checked;
    if (!rep.strict_constriction) {
      ++res.violations;
      note(res, "attempt " + std::to_string(attempts) +
                    ": condition holds but restored " +
                    interval_str(rep.restored) + " not strictly inside " +
                    interval_str(rep.conditioned));
    }
  }
  res.counters["attempts"] = attempts;
  if (res.trials < needed) {
    ++res.violations;
    note(res, "only " + std::to_string(res.trials) + " of " +
                  std::to_string(needed) +
                  " condition-holding instances found in " +
                  std::to_string(attempts) + " attempts");
  }
  return res;
}

CampaignResult check_dichotomy(std::uint64_t seed, int trials) {
  CampaignResult res;
  res.name = "thm410";
  res.seed = seed;
  res.trials = trials;
  Rng rng(seed);
  const int n = 4;
  std::uint32_t full = (1u << n) - 1u;
  for (int t = 0; t < trials; ++t) {
    MassFunction m =
        (t % 2 == 0) ? random_mass(rng, n, 6) : random_cross_mass(rng, n);
    SetFunction bel = belief_from_mass(m);
    for (std::uint32_t a = 1; a < full; ++a) {
      Event A(a, n);
      for (std::uint32_t e = 1; e < full; ++e) {
        Event E(e, n);
        if (bel(E) == 0 || bel(E.complement()) == 0) continue;
        DichotomyReport rep = geom_dempster_dichotomy(bel, A, E);
        ++res.checked;
        ++res.counters["valid_pairs"];
        if (rep.geometric == VerdictKind::StrictDilation) {
          ++res.counters["geometric_dilations"];
          ++res.counters["dilation_instances"];
        }
        if (rep.dempster == VerdictKind::StrictDilation) {
          ++res.counters["dempster_dilations"];
          ++res.counters["dilation_instances"];
        }
        if (!rep.implication_ok) {
          ++res.violations;
          note(res, "trial " + std::to_string(t) + " A mask " +
                        std::to_string(a) + " E mask " + std::to_string(e) +
                        ": geometric " + kind_name(rep.geometric) +
                        " vs Dempster " + kind_name(rep.dempster));
        }
      }
    }
  }
  return res;
}

CampaignResult check_imaging_iff(std::uint64_t seed, int trials) {
  CampaignResult res;
  res.name = "thm411";
  res.seed = seed;
  res.trials = trials;
  Rng rng(seed);
  const int n = 4;
  std::uint32_t full = (1u << n) - 1u;
  for (int t = 0; t < trials; ++t) {
    Event E = random_event(rng, n);
    std::map<std::uint32_t, Rational> mm;
    Rational total = 0;
    int count = rng.uniform_int(1, 5);
    for (int i = 0; i < count; ++i) {
      std::uint32_t mask = 0;
      while (mask == 0) mask = static_cast<std::uint32_t>(rng.next_u64()) & full;
      Rational w(rng.uniform_int(1, 10));
      mm[mask] += w;
      total += w;
    }
    // make sure the evidence has positive belief
    auto atoms = E.members();
    std::uint32_t inside = 1u << atoms[rng.uniform_int(
                               0, static_cast<int>(atoms.size()) - 1)];
    mm[inside] += 3;
    total += 3;
    for (auto& [mask, v] : mm) v /= total;
    MassFunction m(n, std::move(mm));
    TransferFunction tf = random_transfer(rng, n, E);
    Event A = random_event(rng, n);
    ImagingIffReport rep = imaging_constriction_iff(m, tf, A);
    ++res.checked;
    if (rep.verdict == VerdictKind::StrictConstriction)
      ++res.counters["strict_constrictions"];
    if (!rep.ok) {
      ++res.violations;
      note(res, "trial " + std::to_string(t) + ": sums (" +
                    to_string(rep.sum_inside) + ", " +
                    to_string(rep.sum_complement) + ") vs verdict " +
                    kind_name(rep.verdict));
    }
  }
  return res;
}

CampaignResult run_check(const std::string& theorem, std::uint64_t seed,
                         int trials) {
  if (theorem == "lemma13") return check_balance_lemma(seed, trials);
  if (theorem == "prop14") return check_bayes_uniform(seed, trials);
  if (theorem == "prop15") return check_bayes_pointwise(seed, trials);
  if (theorem == "lemma46") return check_envelope_bounds(seed, trials);
  if (theorem == "thm48") return check_forgetting(seed, trials);
  if (theorem == "thm410") return check_dichotomy(seed, trials);
  if (theorem == "thm411") return check_imaging_iff(seed, trials);
  std::string all;
  for (const auto& name : known_checks()) {
    if (!all.empty()) all += ", ";
    all += name;
  }
  throw ValidationError("unknown check '" + theorem + "'; expected one of " +
                        all);
}

std::vector<std::string> known_checks() {
  return {"lemma13", "prop14", "prop15", "lemma46", "thm48", "thm410", "thm411"};
}

}  // namespace constrict
