#include "hindex/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "hindex/error.hpp"
#include "hindex/geometry.hpp"
#include "hindex/metrics.hpp"

namespace hindex::bench {
namespace {

using Clock = std::chrono::steady_clock;

// Samples shorter than this batch several calls together.
constexpr std::chrono::nanoseconds kMinSample = std::chrono::microseconds(500);

volatile std::size_t g_sink = 0;

std::function<std::size_t()> make_work(Method method, const std::vector<Citation>& data) {
  switch (method) {
    case Method::SortScan:
      return [&data] { return sort_scan_kernel(data); };
    case Method::Counting:
      return [&data] { return counting_kernel(data); };
    case Method::Oracle:
      return [&data] { return h_index_oracle(normalize_profile(data)).h; };
    case Method::Geometric:
      return [&data] { return geometry::geometric_h_index(normalize_profile(data)).result.h; };
  }
  throw Error(ErrorCode::UnknownMethod, "unknown method");
}

std::chrono::nanoseconds time_batch(const std::function<std::size_t()>& work, std::size_t reps) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < reps; ++i) g_sink = g_sink + work();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

BenchmarkRow measure(std::size_t n, Method method, const std::vector<Citation>& data, std::size_t runs) {
  const auto work = make_work(method, data);

  // Discarded warmup, which also sizes the batch.
  const auto warm = std::max(time_batch(work, 1), std::chrono::nanoseconds(1));
  const std::size_t reps = warm >= kMinSample ? 1 : static_cast<std::size_t>(kMinSample / warm) + 1;

  std::vector<std::chrono::nanoseconds> samples;
  samples.reserve(runs);
  for (std::size_t r = 0; r < runs; ++r) {
    samples.push_back(time_batch(work, reps) / static_cast<std::int64_t>(reps));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  const auto median = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
  return {n, method, median, runs};
}

}  // namespace

std::vector<Citation> generate_citations(std::size_t n, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<Citation> dist(0, static_cast<Citation>(2 * n));
  std::vector<Citation> out(n);
  for (auto& c : out) c = dist(rng);
  return out;
}

BenchmarkReport run_benchmark(const BenchmarkConfig& config) {
  if (config.sizes.empty()) throw Error(ErrorCode::InvalidSize, "no sizes given");
  for (std::size_t n : config.sizes) {
    if (n == 0) throw Error(ErrorCode::InvalidSize, "sizes must be at least 1");
  }
  if (config.runs < kMinRuns) {
    throw Error(ErrorCode::InvalidRunCount, fmt::format("at least {} runs required", kMinRuns));
  }
  if (config.methods.empty()) throw Error(ErrorCode::UnknownMethod, "no methods given");

  BenchmarkReport report;
  for (std::size_t n : config.sizes) {
    const auto data = generate_citations(n, config.seed);
    for (Method m : config.methods) report.rows.push_back(measure(n, m, data, config.runs));
  }

  for (Method m : config.methods) {
    std::vector<geometry::Point2> points;
    for (const auto& row : report.rows) {
      if (row.method != m) continue;
      const auto t = std::max<double>(static_cast<double>(row.median_runtime.count()), 1.0);
      points.push_back({std::log(static_cast<double>(row.n)), std::log(t)});
    }
    try {
      const auto fit = geometry::fit_trendline(points);
      report.scaling.push_back({m, fit.slope, fit.r_squared});
    } catch (const Error&) {
      // Fewer than two distinct sizes: no exponent.
    }
  }
  return report;
}

std::string format_benchmark(const BenchmarkReport& report) {
  std::string out = fmt::format("{:>12} {:>10} {:>16} {:>6}\n", "n", "method", "median_ns", "runs");
  for (const auto& row : report.rows) {
    out += fmt::format("{:>12} {:>10} {:>16} {:>6}\n", row.n, to_string(row.method), row.median_runtime.count(),
                       row.runs);
  }
  for (const auto& s : report.scaling) {
    out += fmt::format("scaling {}: exponent {:.3f} (r^2 {:.3f})\n", to_string(s.method), s.exponent, s.r_squared);
  }
  return out;
}

}  // namespace hindex::bench
