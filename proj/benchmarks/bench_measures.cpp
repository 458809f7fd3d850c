#include <mre/families.hpp>
#include <mre/lgm.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/pure_measures.hpp>
#include <mre/random.hpp>
#include <mre/re_oracle.hpp>
#include <mre/search.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace mre;

void BM_MrePure(benchmark::State& state) {
  Engine rng(1);
  const PureState psi = random_pure_state(rng);
  for (auto _ : state) benchmark::DoNotOptimize(mre_pure(psi));
}
BENCHMARK(BM_MrePure);

void BM_WoottersEf(benchmark::State& state) {
  Engine rng(2);
  const DensityMatrix rho = random_density(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(wootters_ef(rho));
}
BENCHMARK(BM_WoottersEf);

void BM_WoottersDecomposition(benchmark::State& state) {
  Engine rng(3);
  const DensityMatrix rho = random_density(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(wootters_decomposition(rho));
}
BENCHMARK(BM_WoottersDecomposition);

// Arg is the restart budget.
void BM_MreSearchWerner(benchmark::State& state) {
  const DensityMatrix rho = werner_state(0.75);
  MreSearchConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mre_search(rho, cfg).value);
}
BENCHMARK(BM_MreSearchWerner)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ReEstimateWerner(benchmark::State& state) {
  const DensityMatrix rho = werner_state(0.75);
  ReConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(re_estimate(rho, cfg).value);
}
BENCHMARK(BM_ReEstimateWerner)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ApplyMixed(benchmark::State& state) {
  Engine rng(4);
  const DensityMatrix rho = random_density(rng, 4);
  const KrausSet set = random_kraus_set(rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_mixed(set, rho));
}
BENCHMARK(BM_ApplyMixed);

}  // namespace

BENCHMARK_MAIN();
