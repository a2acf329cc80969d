#include <benchmark/benchmark.h>

#include "degex/degree.hpp"
#include "degex/extraction.hpp"
#include "degex/generators.hpp"
#include "degex/quasirandomness.hpp"

namespace {

using degex::Rational;

void BM_Deviation12Exact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const degex::Hypergraph g = degex::erdos_renyi(n, 3, Rational(1, 2), 1);
  degex::QrOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(degex::deviation_12_exact(g, Rational(1, 2), options));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Deviation12Exact)->Args({12, 1})->Args({16, 1})->Args({18, 1})->Args({18, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Deviation111Exact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const degex::Hypergraph g = degex::erdos_renyi(n, 3, Rational(1, 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(degex::deviation_111_exact(g, Rational(1, 2)));
}
BENCHMARK(BM_Deviation111Exact)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DegreeTable(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto ell = static_cast<std::uint32_t>(state.range(1));
  const degex::Hypergraph g = degex::erdos_renyi(n, 4, Rational(1, 2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(degex::degree_table(g, ell));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_DegreeTable)->Args({40, 2})->Args({60, 2})->Args({60, 3});

void BM_ExtractRandom(benchmark::State& state) {
  const degex::Hypergraph g = degex::erdos_renyi(60, 3, Rational(7, 10), 3);
  const auto m = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    // tight margin so every attempt runs
    benchmark::DoNotOptimize(degex::extract_random(g, 2, m, Rational(1), Rational(0), 64, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_ExtractRandom)->Arg(10)->Arg(20);

void BM_ExtractExhaustive(benchmark::State& state) {
  const degex::Hypergraph g = degex::erdos_renyi(16, 3, Rational(1, 2), 4);
  for (auto _ : state) benchmark::DoNotOptimize(degex::extract_exhaustive(g, 2, 7, Rational(1, 2), Rational(1, 10)));
}
BENCHMARK(BM_ExtractExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
