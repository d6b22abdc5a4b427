#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "dlab/fourier.hpp"
#include "dlab/funcdsl.hpp"
#include "dlab/quadrature.hpp"

namespace {

using namespace dlab;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void BM_DirichletKernel(benchmark::State& state) {
  const KernelOrder n(static_cast<int>(state.range(0)));
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_kernel(n, u));
    u += 1e-3;
  }
}
BENCHMARK(BM_DirichletKernel)->Arg(10)->Arg(1000);

void BM_DirichletKernelNearSingularity(benchmark::State& state) {
  const KernelOrder n(50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_kernel(n, 1e-9));
  }
}
BENCHMARK(BM_DirichletKernelNearSingularity);

void BM_IntegrateOscillatory(benchmark::State& state) {
  const double M = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const QuadratureResult r =
        integrate([M](double x) { return std::cos(M * x); }, 0.0, kTwoPi,
                  1e-9, OscillationHint{M});
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_IntegrateOscillatory)->Arg(40)->Arg(400);

void BM_PartialSumKernelSplit(benchmark::State& state) {
  const PiecewiseFunction f = parse_function("[0,1pi): 1 ; [1pi,2pi]: 0");
  const KernelOrder n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const PartialSumResult r =
        partial_sum_kernel_split(f, n, std::numbers::pi / 2, 1e-8);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PartialSumKernelSplit)->Arg(10)->Arg(100);

void BM_FourierCoefficients(benchmark::State& state) {
  const PiecewiseFunction f = parse_function("exp(-1*x)");
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const FourierCoefficients c = fourier_coefficients(f, K, 1e-9);
    benchmark::DoNotOptimize(c.a[0]);
  }
}
BENCHMARK(BM_FourierCoefficients)->Arg(8)->Arg(32);

void BM_ParseFunction(benchmark::State& state) {
  for (auto _ : state) {
    const PiecewiseFunction f =
        parse_function("[0,1pi): 2*x^2 - 1 ; [1pi,2pi]: cos(3*x+1/2)");
    benchmark::DoNotOptimize(f.x_hi());
  }
}
BENCHMARK(BM_ParseFunction);

}  // namespace

BENCHMARK_MAIN();
