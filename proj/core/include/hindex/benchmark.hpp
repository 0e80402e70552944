#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hindex/profile.hpp"

namespace hindex::bench {

struct BenchmarkRow {
  std::size_t n = 0;
  Method method = Method::Counting;
  std::chrono::nanoseconds median_runtime{0};
  std::size_t runs = 0;
};

/// Slope of log(median runtime) against log(n) for one method.
struct ScalingFit {
  Method method = Method::Counting;
  double exponent = 0.0;
  double r_squared = 0.0;
};

struct BenchmarkConfig {
  std::vector<std::size_t> sizes;
  std::vector<Method> methods;
  std::uint64_t seed = 0;
  std::size_t runs = 5;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;
  std::vector<ScalingFit> scaling;  // one per method, when at least two sizes differ
};

inline constexpr std::size_t kMinRuns = 5;

/// n counts drawn uniformly from [0, 2n]. Same (n, seed) gives the same data.
std::vector<Citation> generate_citations(std::size_t n, std::uint64_t seed);

/**
 * Times each (size, method) pair sequentially. Every timed run is preceded by one
 * discarded warmup; the row reports the median of `runs` wall-clock samples,
 * normalised per call when a sample batches several calls to stay above timer
 * resolution.
 *
 * Errors: InvalidSize for an empty size list or a zero size, InvalidRunCount for
 * fewer than kMinRuns runs, UnknownMethod for an empty method list.
 */
BenchmarkReport run_benchmark(const BenchmarkConfig& config);

std::string format_benchmark(const BenchmarkReport& report);

}  // namespace hindex::bench
