#include <benchmark/benchmark.h>

#include <random>

#include "dp6/brauer.hpp"
#include "dp6/cohomology.hpp"
#include "dp6/lattice.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(-50, 50);
  dp6::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(dp6::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_LatticeH1AllSubgroups(benchmark::State& state) {
  const auto subgroups = dp6::cohomology::enumerate_subgroups();
  for (auto _ : state)
    for (const auto& g : subgroups) benchmark::DoNotOptimize(dp6::cohomology::lattice_h1(dp6::cohomology::lines_lattice(g)));
}
BENCHMARK(BM_LatticeH1AllSubgroups);

void BM_EnumerateValidPairs(benchmark::State& state) {
  const auto configs = dp6::brauer::enumerate_small_configurations(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& c : configs) benchmark::DoNotOptimize(dp6::brauer::enumerate_valid_pairs(c, 6));
  state.counters["configurations"] = static_cast<double>(configs.size());
}
BENCHMARK(BM_EnumerateValidPairs)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
