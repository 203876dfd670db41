#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sharpflat/cross_geometry.hpp"
#include "sharpflat/gauss_jacobi.hpp"
#include "sharpflat/special_functions.hpp"

using namespace sharpflat;

static void BM_JacobiRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> out(n + 1);
  double x = 0.3;
  for (auto _ : state) {
    special::jacobi_eval_all(1.0, 0.0, n, x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_JacobiRecurrence)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

static void BM_GaussJacobiRule(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::gauss_jacobi_rule(7.0, 3.0, q));
}
BENCHMARK(BM_GaussJacobiRule)->RangeMultiplier(2)->Range(16, 512);

static void BM_RepDimensions(benchmark::State& state) {
  const auto space = cross::CrossSpace::octonionic_plane();
  for (auto _ : state) benchmark::DoNotOptimize(cross::rep_dimensions(space, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RepDimensions)->Arg(64)->Arg(512);

static void BM_FourierExpansion(benchmark::State& state) {
  const auto space = cross::CrossSpace::sphere(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cross::fourier_expansion(space, n, 4 * (n + 1)));
}
BENCHMARK(BM_FourierExpansion)->Arg(50)->Arg(400);
