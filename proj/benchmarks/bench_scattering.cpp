#include <benchmark/benchmark.h>

#include <vector>

#include "becscat/born_scattering.hpp"
#include "becscat/gpe_solver.hpp"
#include "becscat/thomas_fermi.hpp"

using namespace becscat;

static void BM_TfFormFactor(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf_form_factor(t));
    t = t < 50.0 ? t + 0.37 : 0.0;
  }
}
BENCHMARK(BM_TfFormFactor);

static void BM_FormFactorTable(benchmark::State& state) {
  const RadialGrid grid(4096, 12.0);
  const RadialProfile profile = initial_profile(100.0, grid);
  const auto n_q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(form_factor_table(profile, 10.0, n_q));
}
BENCHMARK(BM_FormFactorTable)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

static void BM_TotalCrossSection(benchmark::State& state) {
  const FormFactorTable table = tf_form_factor_table(100.0, 200.0, 8001);
  double k = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_cross_section(100.0, table, k));
    k = k < 20.0 ? k * 1.1 : 0.01;
  }
}
BENCHMARK(BM_TotalCrossSection);
