#include <benchmark/benchmark.h>

#include "inerton/inerton.hpp"

namespace {

using namespace inerton;

void BM_Rk4TenPeriods(benchmark::State& state) {
  const DerivedQuantities dq = derive_quantities(ModelParams{});
  IntegratorConfig cfg;
  cfg.step = dq.T / static_cast<double>(state.range(0));
  for (auto _ : state) {
    IntegrationRun run = integrate(canonical_start(dq), 0.0, 10.0 * dq.T, dq, cfg);
    benchmark::DoNotOptimize(run.series.samples.back());
  }
  state.SetItemsProcessed(state.iterations() * 10 * state.range(0));
}
BENCHMARK(BM_Rk4TenPeriods)->Arg(500)->Arg(1000)->Arg(4000);

void BM_Dp45TenPeriods(benchmark::State& state) {
  const DerivedQuantities dq = derive_quantities(ModelParams{});
  IntegratorConfig cfg;
  cfg.method = StepMethod::DormandPrince45;
  cfg.step = dq.T / 100.0;
  for (auto _ : state) {
    IntegrationRun run = integrate(canonical_start(dq), 0.0, 10.0 * dq.T, dq, cfg);
    benchmark::DoNotOptimize(run.series.samples.back());
  }
}
BENCHMARK(BM_Dp45TenPeriods);

void BM_DetectedEvents(benchmark::State& state) {
  const DerivedQuantities dq = derive_quantities(ModelParams{});
  IntegratorConfig cfg;
  cfg.step = dq.T / 1000.0;
  cfg.event_mode = EventMode::Detected;
  for (auto _ : state) {
    IntegrationRun run = integrate(canonical_start(dq), 0.0, 10.0 * dq.T, dq, cfg);
    benchmark::DoNotOptimize(run.events.size());
  }
}
BENCHMARK(BM_DetectedEvents);

}  // namespace
