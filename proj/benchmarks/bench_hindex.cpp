#include <benchmark/benchmark.h>

#include "hindex/benchmark.hpp"
#include "hindex/geometry.hpp"
#include "hindex/metrics.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;

void BM_SortScan(benchmark::State& state) {
  const auto data = hindex::bench::generate_citations(static_cast<std::size_t>(state.range(0)), kSeed);
  for (auto _ : state) benchmark::DoNotOptimize(hindex::sort_scan_kernel(data));
  state.SetComplexityN(state.range(0));
}

void BM_Counting(benchmark::State& state) {
  const auto data = hindex::bench::generate_citations(static_cast<std::size_t>(state.range(0)), kSeed);
  for (auto _ : state) benchmark::DoNotOptimize(hindex::counting_kernel(data));
  state.SetComplexityN(state.range(0));
}

void BM_Oracle(benchmark::State& state) {
  const auto profile =
      hindex::normalize_profile(hindex::bench::generate_citations(static_cast<std::size_t>(state.range(0)), kSeed));
  for (auto _ : state) benchmark::DoNotOptimize(hindex::h_index_oracle(profile).h);
  state.SetComplexityN(state.range(0));
}

// Profile is pre-normalised; this measures the postulate engine alone.
void BM_Geometric(benchmark::State& state) {
  const auto profile =
      hindex::normalize_profile(hindex::bench::generate_citations(static_cast<std::size_t>(state.range(0)), kSeed));
  for (auto _ : state) benchmark::DoNotOptimize(hindex::geometry::geometric_h_index(profile).result.h);
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_SortScan)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_Counting)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity(benchmark::oN);
BENCHMARK(BM_Oracle)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity(benchmark::oN);
BENCHMARK(BM_Geometric)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
