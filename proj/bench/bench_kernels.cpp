#include <benchmark/benchmark.h>

#include <vector>

#include "extremal/convergence.hpp"
#include "extremal/distribution.hpp"
#include "extremal/monte_carlo.hpp"

using namespace extremal;

namespace {

void BM_McEntropy(benchmark::State& state, numerics::Execution exec) {
  const auto d = dist::DistributionSpec::logistic(1.0);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::mc_entropy_max(d, 20, samples, 1, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_McExtropy(benchmark::State& state, numerics::Execution exec) {
  const auto d = dist::DistributionSpec::gev(0.5);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::mc_extropy_max(d, 5, samples, 1, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConvergenceSweep(benchmark::State& state, numerics::Execution exec) {
  const auto d = dist::DistributionSpec::pareto(1.0, 2.0);
  std::vector<long> grid;
  for (long n = 2; n <= state.range(0); ++n) {
    grid.push_back(n);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(evt::convergence_study(d, grid, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_McEntropy, serial, numerics::Execution::serial)->Arg(100000)->Arg(1000000);
BENCHMARK_CAPTURE(BM_McEntropy, parallel, numerics::Execution::parallel)->Arg(100000)->Arg(1000000);
BENCHMARK_CAPTURE(BM_McExtropy, serial, numerics::Execution::serial)->Arg(1000000);
BENCHMARK_CAPTURE(BM_McExtropy, parallel, numerics::Execution::parallel)->Arg(1000000);
BENCHMARK_CAPTURE(BM_ConvergenceSweep, serial, numerics::Execution::serial)->Arg(20000);
BENCHMARK_CAPTURE(BM_ConvergenceSweep, parallel, numerics::Execution::parallel)->Arg(20000);

BENCHMARK_MAIN();
