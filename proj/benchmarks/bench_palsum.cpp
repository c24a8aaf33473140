#include <benchmark/benchmark.h>

#include "palsum/hoffman.hpp"
#include "palsum/palindrome.hpp"
#include "palsum/sums.hpp"

using namespace palsum;

static void BM_PrevPalindrome(benchmark::State& state) {
  const DecimalNat n = greedy_adversary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prev_palindrome(n));
  state.SetLabel(std::to_string(n.num_digits()) + " digits");
}
BENCHMARK(BM_PrevPalindrome)->DenseRange(4, 8);

static void BM_GreedyAdversary(benchmark::State& state) {
  const DecimalNat n = greedy_adversary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a088601(n));
}
BENCHMARK(BM_GreedyAdversary)->DenseRange(4, 8);

static void BM_TwinWitnessSearch(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_twin_not_2p(k, 1));
}
BENCHMARK(BM_TwinWitnessSearch)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_TwoPTable(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(two_p_table(limit).population());
}
BENCHMARK(BM_TwoPTable)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Scan(benchmark::State& state) {
  const DecimalNat hi = DecimalNat::from_uint(static_cast<std::uint64_t>(state.range(0)));
  ScanOptions options;
  options.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan_hoffman(DecimalNat::from_uint(10), hi, options));
}
BENCHMARK(BM_Scan)->Args({1'000'000, 1})->Args({1'000'000, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
