#include <benchmark/benchmark.h>

#include <random>

#include "llcent/window.hpp"

using namespace llcent;

namespace {

WindowMatrix random_matrix(std::uint32_t p, int rows, int cols,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FieldSpec field(p);
  std::vector<std::vector<Scalar>> data(rows, std::vector<Scalar>(cols));
  for (auto& r : data)
    for (auto& v : r) v = static_cast<Scalar>(rng() % p);
  return WindowMatrix::from_rows(field, window_labels(1, 1, cols),
                                 std::move(data));
}

void BM_RankGF2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WindowMatrix m = random_matrix(2, n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_RankGF2)->Range(32, 512)->Complexity();

void BM_RankF5(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WindowMatrix m = random_matrix(5, n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_RankF5)->Range(32, 256)->Complexity();

void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WindowMatrix m = random_matrix(2, n / 2, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Range(32, 256);

void BM_Intersection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WindowMatrix a = random_matrix(3, n / 2, n, 1);
  WindowMatrix b = random_matrix(3, n / 2, n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(row_space_intersection(a, b));
}
BENCHMARK(BM_Intersection)->Range(16, 128);

} // namespace

BENCHMARK_MAIN();
