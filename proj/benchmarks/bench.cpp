#include <benchmark/benchmark.h>

#include "constrict/capacity.hpp"
#include "constrict/extension.hpp"
#include "constrict/model.hpp"
#include "constrict/pooling.hpp"
#include "constrict/random_gen.hpp"
#include "constrict/updating.hpp"

namespace {

using namespace constrict;

void BM_EnvelopeQuery(benchmark::State& state) {
  Rng rng(11);
  StateSpace space = StateSpace::with_default_labels(8);
  CredalSet C = random_credal_set(rng, space, 6, true);
  Event A = random_event(rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(event_interval(C, A));
}
BENCHMARK(BM_EnvelopeQuery);

void BM_MobiusRoundTrip(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(13);
  SetFunction f = random_set_function(rng, n);
  for (auto _ : state) {
    MassFunction m = mobius_transform(f);
    benchmark::DoNotOptimize(belief_from_mass(m));
  }
}
BENCHMARK(BM_MobiusRoundTrip)->Arg(8)->Arg(10)->Arg(12);

void BM_DempsterUpdate(benchmark::State& state) {
  Rng rng(17);
  const int n = 10;
  MassFunction m = random_mass(rng, n, 40);
  Event E = random_event(rng, n);
  while (m.plausibility(E) == 0) E = random_event(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(dempster_update(m, E));
}
BENCHMARK(BM_DempsterUpdate);

void BM_CoherentBounds(benchmark::State& state) {
  Rng rng(19);
  const int n = 6;
  StateSpace space = StateSpace::with_default_labels(n);
  Measure P = random_measure(rng, n, true);
  Assessment a{space, {}, {}, random_event(rng, n)};
  for (int i = 0; i < 4; ++i) {
    Event e = random_event(rng, n);
    a.events.push_back(e);
    a.probs.push_back(P(e));
  }
  for (auto _ : state) benchmark::DoNotOptimize(definetti_bounds(a));
}
BENCHMARK(BM_CoherentBounds);

void BM_DeGrootStep(benchmark::State& state) {
  Rng rng(23);
  const int agents = 8;
  WeightMatrix W(random_positive_stochastic(rng, agents));
  StateSpace space = StateSpace::with_default_labels(4);
  OpinionProfile F{space, {}};
  for (int i = 0; i < agents; ++i)
    F.opinions.push_back(random_measure(rng, 4, true));
  for (auto _ : state) benchmark::DoNotOptimize(degroot_step(W, F));
}
BENCHMARK(BM_DeGrootStep);

}  // namespace

BENCHMARK_MAIN();
