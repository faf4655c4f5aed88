#include <benchmark/benchmark.h>

#include <vector>

#include "becscat/gpe_solver.hpp"
#include "becscat/spectral_kinetic.hpp"

using namespace becscat;

static void BM_KineticPropagate(benchmark::State& state) {
  const RadialGrid grid(static_cast<std::size_t>(state.range(0)), 8.0);
  SpectralKinetic kinetic(grid);
  const RadialProfile seed = harmonic_ground_state(grid);
  std::vector<double> u(seed.values().begin(), seed.values().end());
  for (auto _ : state) {
    kinetic.propagate(u, 1e-3);
    benchmark::DoNotOptimize(u.data());
  }
}
BENCHMARK(BM_KineticPropagate)->Arg(1024)->Arg(4096)->Arg(16384);

static void BM_ImaginaryTimeStep(benchmark::State& state) {
  const RadialGrid grid(static_cast<std::size_t>(state.range(0)), 12.0);
  ImaginaryTimePropagator propagator(grid, 100.0);
  const RadialProfile seed = initial_profile(100.0, grid);
  std::vector<double> u(seed.values().begin(), seed.values().end());
  for (auto _ : state) {
    propagator.step(u, 1e-3);
    benchmark::DoNotOptimize(u.data());
  }
}
BENCHMARK(BM_ImaginaryTimeStep)->Arg(1024)->Arg(4096);

static void BM_EnergyBreakdown(benchmark::State& state) {
  const RadialGrid grid(4096, 12.0);
  const RadialProfile profile = initial_profile(100.0, grid);
  for (auto _ : state) benchmark::DoNotOptimize(energy_breakdown(profile, 100.0));
}
BENCHMARK(BM_EnergyBreakdown);
