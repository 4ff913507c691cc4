#include <benchmark/benchmark.h>

#include "detproc/kernels.hpp"
#include "detproc/operator_oracle.hpp"
#include "detproc/sampler.hpp"
#include "detproc/special_functions.hpp"

using namespace detproc;

static void BM_BesselSeries(benchmark::State& state) {
  double nu = -7.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(nu, 6.0));
    nu = nu > 7.0 ? -7.3 : nu + 0.37;
  }
}
BENCHMARK(BM_BesselSeries);

static void BM_BesselLargeArgument(benchmark::State& state) {
  double nu = -30.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(nu, 35.0));
    nu = nu > 30.0 ? -30.3 : nu + 0.77;
  }
}
BENCHMARK(BM_BesselLargeArgument);

static void BM_WhittakerW(benchmark::State& state) {
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(whittaker_w(0.25, 0.6, x));
    x = x > 30.0 ? 0.05 : x * 1.3;
  }
}
BENCHMARK(BM_WhittakerW);

static void BM_DiscreteBesselOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto l = materialize(plancherel_l(1.0), Window::lattice(m));
    benchmark::DoNotOptimize(k_from_l(l).entries.data());
  }
}
BENCHMARK(BM_DiscreteBesselOracle)->Arg(25)->Arg(50)->Arg(100);

static void BM_WhittakerQuadratureOracle(benchmark::State& state) {
  const auto l = scaled_whittaker_l({0.25, 0.6}).evaluator();
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const QuadratureResolvent k(l, Window::quadrature(40.0, 1e-4, panels));
    benchmark::DoNotOptimize(k(0.5, -1.0));
  }
}
BENCHMARK(BM_WhittakerQuadratureOracle)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_PoissonizedSample(benchmark::State& state) {
  SeededGenerator gen(1);
  const double theta = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_poissonized(theta, gen).size());
}
BENCHMARK(BM_PoissonizedSample)->Arg(4)->Arg(100);

BENCHMARK_MAIN();
