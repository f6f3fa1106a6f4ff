#include <benchmark/benchmark.h>

#include "cardguess/enumeration.hpp"
#include "cardguess/exact.hpp"
#include "cardguess/limit_laws.hpp"
#include "cardguess/moments.hpp"
#include "cardguess/phi.hpp"
#include "cardguess/series.hpp"
#include "cardguess/simulate.hpp"

using namespace cardguess;

static void BM_JointPMF(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_pmf_WT({m, m / 2}));
}
BENCHMARK(BM_JointPMF)->Arg(20)->Arg(80)->Arg(320);

static void BM_MarginalWeightsW(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(marginal_W_weights({m, m}));
}
BENCHMARK(BM_MarginalWeightsW)->Arg(400)->Arg(1600)->Arg(6400);

static void BM_Enumeration(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_decks({m, m}));
}
BENCHMARK(BM_Enumeration)->Arg(4)->Arg(6)->Arg(8);

static void BM_PhiTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phi_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PhiTable)->Arg(20)->Arg(40);

static void BM_SeriesFhat(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(series_Fhat(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesFhat)->Arg(8)->Arg(12);

static void BM_FactorialMomentW(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorial_moment_W({m, m}, 2));
}
BENCHMARK(BM_FactorialMomentW)->Arg(1000)->Arg(10000);

static void BM_RayleighDistance(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto regime = RegimeSpec::w_small_difference();
  for (auto _ : state) benchmark::DoNotOptimize(convergence_distance({m, m}, regime));
}
BENCHMARK(BM_RayleighDistance)->Arg(400)->Arg(6400);

static void BM_Simulate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Philox4x64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_deck({m, m}, rng));
}
BENCHMARK(BM_Simulate)->Arg(8)->Arg(256);

BENCHMARK_MAIN();
