#include <benchmark/benchmark.h>

#include "negbeta/analysis.hpp"
#include "negbeta/inverse.hpp"
#include "negbeta/search.hpp"

using namespace negbeta;

static void BM_Analyze(benchmark::State& state) {
  const auto pi = Permutation::parse("892364157");
  for (auto _ : state) benchmark::DoNotOptimize(analyze(pi));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMicrosecond);

static void BM_ThresholdValue(benchmark::State& state) {
  const auto w = EventuallyPeriodicWord::parse("(301210220)");
  for (auto _ : state) benchmark::DoNotOptimize(b_of(w).decimal(30));
}
BENCHMARK(BM_ThresholdValue)->Unit(benchmark::kMicrosecond);

static void BM_Spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(n));
}
BENCHMARK(BM_Spectrum)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_CountB1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_b1(n));
}
BENCHMARK(BM_CountB1)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_MinAlphabet(benchmark::State& state) {
  const auto pi = Permutation::parse("7325416");
  for (auto _ : state) benchmark::DoNotOptimize(min_alphabet_bruteforce(pi));
}
BENCHMARK(BM_MinAlphabet)->Unit(benchmark::kMillisecond);

static void BM_Invert(benchmark::State& state) {
  const auto w = EventuallyPeriodicWord::parse("211(210)");
  for (auto _ : state) benchmark::DoNotOptimize(construct_pi(w));
}
BENCHMARK(BM_Invert)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
