#include "hindex/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ranges>

#include "hindex/geometry.hpp"

namespace hindex {
namespace {

// `ascending` must be sorted non-decreasingly.
template <std::ranges::random_access_range R>
std::size_t scan_ascending(const R& ascending) {
  const std::size_t n = std::ranges::size(ascending);
  for (std::size_t i = 0; i < n; ++i) {
    const auto remaining = static_cast<Citation>(n - i);
    if (remaining <= ascending[i]) return static_cast<std::size_t>(remaining);
  }
  return 0;
}

// Bucket counts never exceed n, so Counter only has to hold n.
template <typename Counter>
std::size_t count_buckets(std::span<const Citation> citations) {
  const std::size_t n = citations.size();
  // h <= n, so everything above n lands in the last bucket.
  std::vector<Counter> buckets(n + 1, 0);
  for (Citation c : citations) {
    const auto clamped = std::min(static_cast<std::size_t>(c), n);
    ++buckets[clamped];
  }
  std::size_t at_least = 0;
  for (std::size_t k = n; k > 0; --k) {
    at_least += buckets[k];
    if (at_least >= k) return k;
  }
  return 0;
}

HIndexResult make_result(std::size_t h, Method method) {
  HIndexResult r{h, method, std::nullopt};
  if (h > 0) r.pivot = h;
  return r;
}

}  // namespace

std::size_t sort_scan_kernel(std::vector<Citation> citations) {
  std::sort(citations.begin(), citations.end());
  return scan_ascending(citations);
}

std::size_t counting_kernel(std::span<const Citation> citations) {
  if (citations.size() <= std::numeric_limits<std::uint32_t>::max()) {
    return count_buckets<std::uint32_t>(citations);
  }
  return count_buckets<std::size_t>(citations);
}

HIndexResult h_index_sort_scan(const CitationProfile& profile) {
  return make_result(scan_ascending(profile.sorted_desc() | std::views::reverse), Method::SortScan);
}

HIndexResult h_index_counting(const CitationProfile& profile) {
  return make_result(counting_kernel(profile.raw()), Method::Counting);
}

HIndexResult h_index_oracle(const CitationProfile& profile) {
  const auto sorted = profile.sorted_desc();
  std::size_t best = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (sorted[i - 1] >= static_cast<Citation>(i)) best = std::max(best, i);
  }
  return make_result(best, Method::Oracle);
}

HIndexResult compute_h_index(const CitationProfile& profile, Method method) {
  switch (method) {
    case Method::SortScan: return h_index_sort_scan(profile);
    case Method::Counting: return h_index_counting(profile);
    case Method::Oracle: return h_index_oracle(profile);
    case Method::Geometric: return geometry::geometric_h_index(profile).result;
  }
  return h_index_oracle(profile);
}

}  // namespace hindex
