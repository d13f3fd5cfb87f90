#include <benchmark/benchmark.h>

#include <random>

#include "llcent/harness.hpp"

using namespace llcent;

namespace {

BandedEndo suite_endo(int which) {
  auto cases = shipped_suite();
  return cases[which % cases.size()].endo;
}

void BM_HStarShift(benchmark::State& state) {
  SpaceSpec space(FieldSpec(2), static_cast<int>(state.range(0)));
  BandedEndo f = bernoulli_left(space);
  for (auto _ : state) benchmark::DoNotOptimize(h_star(f, 1));
}
BENCHMARK(BM_HStarShift)->Arg(1)->Arg(2)->Arg(3);

void BM_HStarRandomF5(benchmark::State& state) {
  std::mt19937_64 rng(99);
  RandomCaseParams params;
  params.primes = {5};
  params.max_tracks = static_cast<int>(state.range(0));
  BandedEndo f = random_endo(rng, params);
  for (auto _ : state) benchmark::DoNotOptimize(h_star(f, 1));
}
BENCHMARK(BM_HStarRandomF5)->Arg(1)->Arg(2)->Arg(3);

void BM_EntStarSweep(benchmark::State& state) {
  BandedEndo f = suite_endo(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ent_star(f));
}
BENCHMARK(BM_EntStarSweep)->DenseRange(0, 5);

void BM_LimitFree(benchmark::State& state) {
  BandedEndo f = suite_endo(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_star_limit_free(f, 1));
}
BENCHMARK(BM_LimitFree)->DenseRange(0, 5);

void BM_BridgeCheck(benchmark::State& state) {
  BandedEndo f = suite_endo(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bridge_check(f, 1, 12));
}
BENCHMARK(BM_BridgeCheck)->DenseRange(0, 5);

void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(3);
  RandomCaseParams params;
  BandedEndo f = random_endo(rng, params);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, f));
}
BENCHMARK(BM_Compose);

void BM_Dualize(benchmark::State& state) {
  std::mt19937_64 rng(3);
  RandomCaseParams params;
  BandedEndo f = random_endo(rng, params);
  for (auto _ : state) benchmark::DoNotOptimize(dualize(f));
}
BENCHMARK(BM_Dualize);

} // namespace

BENCHMARK_MAIN();
