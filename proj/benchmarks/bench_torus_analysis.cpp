#include <benchmark/benchmark.h>

#include "sharpflat/torus_analysis.hpp"

using namespace sharpflat;
using namespace sharpflat::torus;

static void BM_KernelMultipliers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = PeriodicGrid::for_degree(n);
  const auto params = JacobiParams::from_double(0.5, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(opnorm_l2_exact(params, n, grid));
}
BENCHMARK(BM_KernelMultipliers)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

static void BM_OpnormBracket(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = PeriodicGrid::for_degree(n);
  const auto params = JacobiParams::from_double(1, 1);
  BracketOptions options;
  options.power_steps = 20;
  for (auto _ : state) benchmark::DoNotOptimize(opnorm_bracket(params, n, 8.0, grid, 1, options));
}
BENCHMARK(BM_OpnormBracket)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
