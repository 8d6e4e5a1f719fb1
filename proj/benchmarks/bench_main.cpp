#include <benchmark/benchmark.h>

#include "dashed/bijections.hpp"
#include "dashed/distribution.hpp"
#include "dashed/generators.hpp"
#include "dashed/patterns.hpp"

using namespace dashed;

namespace {

void BM_CountInWordOverPermutations(benchmark::State& state) {
  const auto pattern = parse_pattern("1 3 - 2 4");
  const auto perms = materialize(permutations(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (const auto& w : perms) total += count_in_word(pattern, w);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(perms.size()));
}
BENCHMARK(BM_CountInWordOverPermutations)->Arg(6)->Arg(7)->Arg(8);

void BM_EulerMahonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 1; k <= n; ++k) benchmark::DoNotOptimize(check_euler_mahonian("mak+bmaj", n, k, 1));
  }
}
BENCHMARK(BM_EulerMahonian)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_OrderedSetPartitionStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto stats = partition_statistics({"mak", "makp", "bdes"});
  for (auto _ : state) {
    for (int k = 1; k <= n; ++k) benchmark::DoNotOptimize(partition_distribution(n, k, stats, 1));
  }
}
BENCHMARK(BM_OrderedSetPartitionStats)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_GammaOverWords(benchmark::State& state) {
  const auto words = materialize(lwords(3, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(gamma(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_GammaOverWords)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
