#include <benchmark/benchmark.h>

#include "hardylab/corpus.hpp"
#include "hardylab/dual_approx.hpp"
#include "hardylab/extremal.hpp"
#include "hardylab/fourier.hpp"
#include "hardylab/squarefn.hpp"

using namespace hardylab;

static void BM_ForwardDft(benchmark::State& state) {
  const auto m = static_cast<size_t>(state.range(0));
  const auto f = trig_corpus(1, 1, 16, m)[0];
  for (auto _ : state) benchmark::DoNotOptimize(forward_dft(f.values()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardDft)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_SquareFunctionSweep(benchmark::State& state) {
  const PolarGrid grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto field = grad_modulus_power(poly_corpus(2, 1, 16)[0], 1.0, grid);
  for (auto _ : state) benchmark::DoNotOptimize(square_function_sweep(field));
}
BENCHMARK(BM_SquareFunctionSweep)->Args({32, 256})->Args({32, 512})->Args({64, 1024});

static void BM_CalderonProfile(benchmark::State& state) {
  const auto F = poly_corpus(3, 1, 16)[0];
  const CalderonGrid cg{32, static_cast<int>(state.range(0)), 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(calderon_profile(F, 0.5, cg));
}
BENCHMARK(BM_CalderonProfile)->Arg(256)->Arg(512);

static void BM_BergmanExtremal(benchmark::State& state) {
  const auto k = kernel_corpus(4, 1, 3)[0];
  const double p = state.range(0) == 0 ? 4.0 / 3.0 : 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bergman_extremal(k, p));
}
BENCHMARK(BM_BergmanExtremal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_HardyExtremal(benchmark::State& state) {
  const auto k = kernel_corpus(5, 1, 3)[0];
  const double p = state.range(0) == 0 ? 4.0 / 3.0 : 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_hardy_extremal(k, p));
}
BENCHMARK(BM_HardyExtremal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_DualMin(benchmark::State& state) {
  const auto kd = conjugate_coefficients(kernel_corpus(6, 1, 3)[0], 256);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dual_min(kd, 4.0 / 3.0));
}
BENCHMARK(BM_DualMin)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
