#include <benchmark/benchmark.h>

#include "tangle/curves.hpp"
#include "tangle/envelope.hpp"

namespace {

void run(benchmark::State& state, tangle::Execution exec, const char* measure, const char* family) {
  const auto fam = tangle::family_by_name(family);
  const auto m = tangle::measure_by_name(measure);
  const auto p = tangle::linspace(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  const auto phi = tangle::phase_grid(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto set = tangle::characteristic_curves(fam, m, p, phi, exec);
    benchmark::DoNotOptimize(set.min_curve.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_N2Serial(benchmark::State& s) { run(s, tangle::Execution::serial, "n2", "Z4"); }
void BM_N2Parallel(benchmark::State& s) { run(s, tangle::Execution::parallel, "n2", "Z4"); }
void BM_Tau3Serial(benchmark::State& s) { run(s, tangle::Execution::serial, "tau3", "Zapp"); }
void BM_Tau3Parallel(benchmark::State& s) { run(s, tangle::Execution::parallel, "tau3", "Zapp"); }

}  // namespace

BENCHMARK(BM_N2Serial)->Args({201, 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_N2Parallel)->Args({201, 16})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Tau3Serial)->Args({2001, 721})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tau3Parallel)->Args({2001, 721})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
