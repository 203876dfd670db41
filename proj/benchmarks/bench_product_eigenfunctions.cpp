#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sharpflat/product_eigenfunctions.hpp"

using namespace sharpflat;
using namespace sharpflat::product;

namespace {

ProductManifold s3_power5() { return ProductManifold(std::vector<CrossSpace>(5, CrossSpace::sphere(3))); }

}  // namespace

static void BM_EnumerateShell(benchmark::State& state) {
  const auto m = s3_power5();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_shell(m, state.range(0), state.range(1) != 0));
}
BENCHMARK(BM_EnumerateShell)->Args({2500, 1})->Args({10000, 1})->Args({2500, 0});

static void BM_ShellCounts(benchmark::State& state) {
  const auto m = s3_power5();
  for (auto _ : state) benchmark::DoNotOptimize(unconstrained_shell_counts(m, state.range(0)));
}
BENCHMARK(BM_ShellCounts)->Arg(10000);

static void BM_ExtremizerEval(benchmark::State& state) {
  const auto m = s3_power5();
  const Extremizer f(m, enumerate_shell(m, state.range(0), true));
  auto ws = f.make_workspace();
  const std::vector<double> theta = {0.01, -0.02, 0.03, 0.005, -0.015};
  for (auto _ : state) benchmark::DoNotOptimize(f.evaluate(theta, ws));
  state.counters["shell"] = static_cast<double>(f.shell().size());
}
BENCHMARK(BM_ExtremizerEval)->Arg(2500)->Arg(9999);

static void BM_RestrictionNorm(benchmark::State& state) {
  const auto m = s3_power5();
  const Extremizer f(m, enumerate_shell(m, 2500, true));
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const FlatSubmanifold plane(5, 2, {r3, 0, r3, 0, r3, 0, 0, r2, 0, r2}, std::vector<double>(5, 0.0),
                              {{-0.5, 0.5}, {-0.5, 0.5}});
  const double exponents[] = {2.0, 6.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(restriction_lp_norms(f, plane, exponents, {}, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_RestrictionNorm)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
