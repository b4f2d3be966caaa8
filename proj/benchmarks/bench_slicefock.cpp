#include <benchmark/benchmark.h>

#include "slicefock/fock.hpp"
#include "slicefock/kernel.hpp"
#include "slicefock/operators.hpp"
#include "slicefock/slice_series.hpp"
#include "slicefock/smoothness.hpp"

using namespace slicefock;

static void BM_EvaluateExp(benchmark::State& state) {
  const SliceSeries f(Generator::exp());
  const Quaternion q{0.5, 1.0, -2.0, 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, q * static_cast<double>(state.range(0))));
}
BENCHMARK(BM_EvaluateExp)->Arg(1)->Arg(4)->Arg(16);

static void BM_SliceNorm(benchmark::State& state) {
  const SliceSeries f = random_series(8, 3);
  const GridSizes g{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(2 * state.range(0)), 64};
  for (auto _ : state) benchmark::DoNotOptimize(slice_norm(f, 2.0, 1.0, ImaginaryUnit::j(), g));
}
BENCHMARK(BM_SliceNorm)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_FirstKindNorm(benchmark::State& state) {
  const SliceSeries f = random_series(6, 4);
  NormSpec spec;
  spec.kind = FockKind::kFirst;
  spec.p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(norm(f, spec).value);
}
BENCHMARK(BM_FirstKindNorm)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_GramSecond(benchmark::State& state) {
  std::vector<SliceSeries> basis;
  for (int k = 0; k <= state.range(0); ++k) basis.push_back(SliceSeries(Generator::monomial(k)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_second(basis, 1.0, ImaginaryUnit::i()));
}
BENCHMARK(BM_GramSecond)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_JacksonMultipliers(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jackson_op(static_cast<int>(state.range(0)), 1, 2.0));
}
BENCHMARK(BM_JacksonMultipliers)->Arg(8)->Arg(64);

static void BM_VerifyVdp(benchmark::State& state) {
  const SliceSeries f(Generator::exp());
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_vdp(f, static_cast<int>(state.range(0)), 2.0, 1.0, ImaginaryUnit::i()));
}
BENCHMARK(BM_VerifyVdp)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Modulus(benchmark::State& state) {
  const SliceSeries f(Generator::exp());
  ModulusQuery q;
  q.k = 2;
  q.delta = 0.25;
  for (auto _ : state) benchmark::DoNotOptimize(modulus(f, q));
}
BENCHMARK(BM_Modulus)->Unit(benchmark::kMillisecond);

static void BM_BestApproxL1(benchmark::State& state) {
  const SliceSeries f(Generator::exp());
  for (auto _ : state)
    benchmark::DoNotOptimize(best_approx_lp(f, static_cast<std::size_t>(state.range(0)), 1.0, 1.0, ImaginaryUnit::i()));
}
BENCHMARK(BM_BestApproxL1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KernelFit(benchmark::State& state) {
  const SliceSeries f(Generator::exp());
  const auto centers = equispaced_real_centers(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_with_sections(f, centers, 1.0));
}
BENCHMARK(BM_KernelFit)->Arg(2)->Arg(8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
