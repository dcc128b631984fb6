#include <benchmark/benchmark.h>

#include <numbers>

#include "noon/bootstrap.hpp"
#include "noon/estimation.hpp"
#include "noon/metrology.hpp"
#include "noon/noise.hpp"

namespace {

void BM_PreparePure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const noon::NoiseModel model(n, 0.1);
  const noon::PhaseSample sample = noon::draw_phase_sample(model, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noon::prepare_pure(model, sample));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PreparePure)->RangeMultiplier(2)->Range(2, 512)->Complexity();

void BM_PrepareMixedExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const noon::NoiseModel model(n, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noon::prepare_mixed_exact(model));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrepareMixedExact)->DenseRange(4, 20, 4)->Complexity();

void BM_PrepareMixedMc(benchmark::State& state) {
  const noon::NoiseModel model(4, 0.1);
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(noon::prepare_mixed_mc(model, samples, 7, threads));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_PrepareMixedMc)
    ->Args({10000, 1})
    ->Args({10000, 4})
    ->Args({100000, 1})
    ->Args({100000, 4});

void BM_FisherNumeric(benchmark::State& state) {
  const int n = 5;
  const auto probabilities = [n](double phi) {
    const auto [p, q] = noon::analytic_probabilities(n, 0.05, phi);
    return std::vector<double>{p, q};
  };
  const double phi = std::numbers::pi / (2.0 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        noon::fisher_information_numeric(probabilities, phi));
  }
}
BENCHMARK(BM_FisherNumeric);

void BM_SensitivityCurve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(noon::sensitivity_curve(0.02, 1, 400));
  }
}
BENCHMARK(BM_SensitivityCurve);

void BM_SimulateAndEstimate(benchmark::State& state) {
  const std::int64_t shots = state.range(0);
  const double phi_true = std::numbers::pi / 10.0;
  std::uint64_t stream = 0;
  for (auto _ : state) {
    const noon::ShotRecord record =
        noon::simulate_shots(5, 0.05, phi_true, shots, 3, stream++);
    benchmark::DoNotOptimize(noon::mle_phase(record));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          shots);
}
BENCHMARK(BM_SimulateAndEstimate)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_BootstrapSchedule(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(noon::compare_trajectories(0.2, 6));
  }
}
BENCHMARK(BM_BootstrapSchedule);

}  // namespace

BENCHMARK_MAIN();
