#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hindex {

/// Citation count of a single paper. Signed so that invalid negative input can
/// be detected rather than wrapped.
using Citation = std::int64_t;

enum class Method { SortScan, Counting, Oracle, Geometric };

inline constexpr Method kAllMethods[] = {Method::SortScan, Method::Counting, Method::Oracle,
                                         Method::Geometric};

std::string_view to_string(Method method) noexcept;

/// Parses the short names used on the command line: sort, count, oracle, geometric.
/// Throws Error(UnknownMethod) for anything else.
Method parse_method(std::string_view name);

/**
 * Validated citation record of one author.
 *
 * Keeps the counts in input order alongside a non-increasing copy. Ranks
 * (journal numbers) are 1-based positions into the sorted copy.
 */
class CitationProfile {
 public:
  CitationProfile() = default;

  /// Throws Error(NegativeCitation) carrying the offending index.
  static CitationProfile from_raw(std::vector<Citation> raw);

  [[nodiscard]] std::span<const Citation> raw() const noexcept { return raw_; }
  [[nodiscard]] std::span<const Citation> sorted_desc() const noexcept { return sorted_desc_; }
  [[nodiscard]] std::size_t size() const noexcept { return raw_.size(); }
  [[nodiscard]] bool empty() const noexcept { return raw_.empty(); }

  /// Citations of the paper at 1-based descending rank.
  [[nodiscard]] Citation at_rank(std::size_t rank) const { return sorted_desc_.at(rank - 1); }

 private:
  std::vector<Citation> raw_;
  std::vector<Citation> sorted_desc_;
};

CitationProfile normalize_profile(std::vector<Citation> raw);

struct HIndexResult {
  std::size_t h = 0;
  Method method = Method::Oracle;
  /// 1-based rank of the last paper counted into h; empty when h == 0.
  std::optional<std::size_t> pivot;

  friend bool operator==(const HIndexResult&, const HIndexResult&) = default;
};

}  // namespace hindex
