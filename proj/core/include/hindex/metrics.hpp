#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hindex/profile.hpp"

namespace hindex {

/// Sort ascending, then walk upward: at 0-based position i, n - i papers remain
/// and the first position whose count covers them yields h.
HIndexResult h_index_sort_scan(const CitationProfile& profile);

/// Bucket count with clamping at n followed by a suffix sweep. Linear in n.
HIndexResult h_index_counting(const CitationProfile& profile);

/// Exhaustive check of the definition: max{ i : sorted_desc[i] >= i }, 0 if none.
HIndexResult h_index_oracle(const CitationProfile& profile);

HIndexResult compute_h_index(const CitationProfile& profile, Method method);

// Raw kernels over unvalidated-but-non-negative input, used by the benchmark
// harness so that sorting cost is part of what gets timed.

/// Takes ownership of the counts and sorts them in place.
std::size_t sort_scan_kernel(std::vector<Citation> citations);

std::size_t counting_kernel(std::span<const Citation> citations);

}  // namespace hindex
