#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "dqd/correlations.hpp"
#include "dqd/scan.hpp"

namespace {

using namespace dqd;

void BM_JacobiEigensolve(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = dist(rng);
  for (auto _ : state) {
    auto ed = jacobi_eigensolve(m);
    benchmark::DoNotOptimize(ed);
  }
}
BENCHMARK(BM_JacobiEigensolve);

void BM_GibbsAnalytic(benchmark::State& state) {
  const ModelParams p{10.0, 15.0, 160.0};
  const Temperature t(10.0);
  for (auto _ : state) {
    auto s = gibbs_analytic(p, t);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_GibbsAnalytic);

void BM_MeasureBundle(benchmark::State& state) {
  const ThermalState s = gibbs_analytic({10.0, 15.0, 160.0}, Temperature(10.0));
  for (auto _ : state) {
    auto m = correlated_coherence(s, std::numbers::pi / 4.0);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MeasureBundle);

void BM_ConcurrenceNumeric(benchmark::State& state) {
  const ThermalState s = gibbs_analytic({10.0, 15.0, 160.0}, Temperature(10.0));
  for (auto _ : state) {
    double c = concurrence_numeric(s);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ConcurrenceNumeric);

void BM_TemperatureSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.axis = SweepAxis::temperature;
  spec.start = 0.01;
  spec.stop = 100.0;
  spec.points = static_cast<int>(state.range(0));
  spec.fixed = ModelParams{10.0, 15.0, 160.0};
  spec.theta = std::numbers::pi / 4.0;
  for (auto _ : state) {
    auto r = run_sweep(spec);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * spec.points);
}
BENCHMARK(BM_TemperatureSweep)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
