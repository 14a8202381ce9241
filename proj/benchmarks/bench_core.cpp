// Hot-path benchmarks: special-function evaluation, kernel assembly, the
// power-iteration norm estimate, and full Green applications.

#include <benchmark/benchmark.h>

#include <complex>

#include "airyspectra/airy.hpp"
#include "airyspectra/completeness.hpp"
#include "airyspectra/operator.hpp"
#include "airyspectra/resolvent.hpp"

using namespace airyspectra;

namespace {

void BM_AiSeries(benchmark::State& state) {
  const Complex z{4.1, -2.7};
  for (auto _ : state) benchmark::DoNotOptimize(ai_scaled(z));
}
BENCHMARK(BM_AiSeries);

void BM_AiAsymptotic(benchmark::State& state) {
  const Complex z{15.0, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(ai_scaled(z));
}
BENCHMARK(BM_AiAsymptotic);

void BM_AiRotated(benchmark::State& state) {
  const Complex z{-12.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(ai_scaled(z));
}
BENCHMARK(BM_AiRotated);

void BM_AiryZero(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(airy_zero(25));
}
BENCHMARK(BM_AiryZero);

void BM_KernelAssembly(benchmark::State& state) {
  const AiryOperator op({0.0, 1.0});
  const Grid grid = Grid::composite_gauss(22.0, static_cast<int>(state.range(0)));
  const Complex lambda{-2.0, -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix(op, lambda, grid));
}
BENCHMARK(BM_KernelAssembly)->Arg(128)->Arg(256)->Arg(512);

void BM_PowerIteration(benchmark::State& state) {
  const AiryOperator op({0.0, 1.0});
  const Grid grid = Grid::composite_gauss(22.0, static_cast<int>(state.range(0)));
  const KernelMatrix k = kernel_matrix(op, {-2.0, -1.0}, grid);
  for (auto _ : state) benchmark::DoNotOptimize(largest_singular_value(k));
}
BENCHMARK(BM_PowerIteration)->Arg(128)->Arg(256)->Arg(512);

void BM_ResolventNormPoint(benchmark::State& state) {
  const AiryOperator op({0.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolvent_norm(op, {-2.0, -1.0},
                                            static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ResolventNormPoint)->Arg(128)->Arg(256);

void BM_GreenApply(benchmark::State& state) {
  const AiryOperator op({0.0, 1.0});
  const Grid grid = Grid::composite_gauss(25.0, static_cast<int>(state.range(0)));
  const GridFunction f =
      sample(grid, [](double x) { return Complex{x * std::exp(-x), 0.0}; });
  for (auto _ : state) benchmark::DoNotOptimize(green_apply(op, f));
}
BENCHMARK(BM_GreenApply)->Arg(500)->Arg(2000);

void BM_Alpha0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(alpha0(2.4));
}
BENCHMARK(BM_Alpha0);

}  // namespace

BENCHMARK_MAIN();
