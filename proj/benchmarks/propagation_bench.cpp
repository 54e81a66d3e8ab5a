#include <benchmark/benchmark.h>

#include <cmath>

#include "groverad/analysis.hpp"
#include "groverad/full_space.hpp"
#include "groverad/lambert_w.hpp"

namespace {

using namespace groverad;

void BM_Step(benchmark::State& state) {
  QuantumState psi{{0.6, 0.0}, {0.0, 0.8}};
  const FieldVector h{0.3, 0.1, -0.9};
  for (auto _ : state) {
    psi = step(psi, h, 1e-3);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_Step);

void BM_Evolve(benchmark::State& state) {
  EvolutionSpec spec(ProblemSize(10), static_cast<double>(state.range(0)));
  spec.max_samples = 2;
  spec.integrator = state.range(1) == 0 ? Integrator::midpoint : Integrator::magnus4;
  for (auto _ : state) benchmark::DoNotOptimize(evolve(spec).final_probability());
  state.SetItemsProcessed(state.iterations() * spec.resolved_steps());
}
BENCHMARK(BM_Evolve)->ArgsProduct({{10, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FullSpaceEvolve(benchmark::State& state) {
  const ProblemSize n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(full_space_evolve(n, 5.0, 2000).p_final);
}
BENCHMARK(BM_FullSpaceEvolve)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_LambertW(benchmark::State& state) {
  double x = -0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambert_w_minus1(x));
    x = x < -1e-200 ? x * 0.5 : -0.3;
  }
}
BENCHMARK(BM_LambertW);

void BM_AdiabaticCondition(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(adiabatic_condition(ProblemSize(100), 10.0, DrivingKind::const_min));
  }
}
BENCHMARK(BM_AdiabaticCondition)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
