#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "fpp/distributions.hpp"
#include "fpp/frac_calculus.hpp"
#include "fpp/processes.hpp"
#include "fpp/rng.hpp"
#include "fpp/samplers.hpp"
#include "fpp/special_functions.hpp"
#include "fpp/validation.hpp"

namespace {

// z = -range(0) / 10 walks the series, integral and asymptotic branches.
void BM_MittagLeffler(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(fpp::ml_one(0.6, z));
}
BENCHMARK(BM_MittagLeffler)->Arg(5)->Arg(50)->Arg(500);

void BM_FppPmf(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fpp::fpp_pmf(0.6, 1.0, 2.0, n));
}
BENCHMARK(BM_FppPmf)->Arg(0)->Arg(5)->Arg(20);

void BM_GeneralPmfTempered(benchmark::State& state) {
  const auto spec = fpp::SubordinatorSpec::tempered_stable(0.6, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(fpp::general_pmf(spec, 1.0, 1.0, 3));
}
BENCHMARK(BM_GeneralPmfTempered);

void BM_InverseStableDensity(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(fpp::inverse_stable_density(beta, 0.8, 1.0));
}
BENCHMARK(BM_InverseStableDensity)->Arg(3)->Arg(5)->Arg(8);

void BM_StableUnit(benchmark::State& state) {
  fpp::RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(fpp::sample_stable_unit(0.7, rng));
}
BENCHMARK(BM_StableUnit);

void BM_MlWaiting(benchmark::State& state) {
  fpp::RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(fpp::sample_ml_waiting(0.7, 1.0, rng));
}
BENCHMARK(BM_MlWaiting);

void BM_TemperedMlWaiting(benchmark::State& state) {
  fpp::RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(fpp::sample_tempered_ml_waiting(0.5, 1.0, 2.0, rng));
}
BENCHMARK(BM_TemperedMlWaiting);

void BM_SimulateFpp(benchmark::State& state) {
  fpp::RngStream rng(1, 0);
  const double horizon = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpp::simulate_fpp(0.7, 1.0, horizon, rng));
}
BENCHMARK(BM_SimulateFpp)->Arg(10)->Arg(1000);

void BM_CaputoL1(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  const auto g = fpp::SampledFunction::sample([](double t) { return std::sin(t); }, 0.0, 1.0 / cells, cells);
  for (auto _ : state) benchmark::DoNotOptimize(fpp::caputo(g, 0.5, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CaputoL1)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_KsTwoSample(benchmark::State& state) {
  fpp::RngStream rng(1, 0);
  std::vector<double> a(state.range(0)), b(state.range(0));
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(fpp::ks_two_sample(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_KsTwoSample)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
