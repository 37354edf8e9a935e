// Serial vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcw/kernels.hpp"
#include "qcw/state_factory.hpp"

namespace {

std::vector<qcw::DensityMatrix> random_states(int n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  std::vector<qcw::DensityMatrix> out;
  while (static_cast<int>(out.size()) < n) {
    try {
      out.push_back(qcw::make_general(qcw::Vec3(u(rng), u(rng), u(rng)), qcw::Vec3(u(rng), u(rng), u(rng)),
                                      qcw::Vec3(u(rng), u(rng), u(rng))));
    } catch (const qcw::Error&) {
    }
  }
  return out;
}

void BM_GridSerial(benchmark::State& state) {
  const auto rho = qcw::make_werner(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::measured_information_grid_serial(rho, qcw::AngleGrid{}));
}
void BM_GridParallel(benchmark::State& state) {
  const auto rho = qcw::make_werner(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::measured_information_grid(rho, qcw::AngleGrid{}));
}

void BM_DiscordBatchSerial(benchmark::State& state) {
  const auto states = random_states(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::discord_batch_serial(states));
}
void BM_DiscordBatchParallel(benchmark::State& state) {
  const auto states = random_states(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcw::discord_batch(states));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto alphas = qcw::linspace(0.0, 1.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::werner_sweep_serial(alphas, true));
}
void BM_SweepParallel(benchmark::State& state) {
  const auto alphas = qcw::linspace(0.0, 1.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(qcw::werner_sweep(alphas, true));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscordBatchSerial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscordBatchParallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
