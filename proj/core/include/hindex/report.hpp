#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hindex/geometry.hpp"
#include "hindex/profile.hpp"

namespace hindex::report {

struct ProfileSummary {
  std::size_t n = 0;
  Citation min_citations = 0;
  Citation max_citations = 0;
  Citation total_citations = 0;
};

struct TrendlineSection {
  geometry::TrendlineEstimate estimate;
  /// The trendline is an approximation; this records whether it hit the exact h.
  bool matches_exact = false;
};

/// Every method's result for one profile. `agreement` must hold; callers treat
/// a false value as a defect.
struct MetricsReport {
  ProfileSummary summary;
  std::array<HIndexResult, 4> results{};  // indexed in kAllMethods order
  std::optional<geometry::GeometricTrace> trace;
  std::optional<TrendlineSection> trendline;
  bool agreement = false;
  /// Methods included when emitting; all four by default.
  std::vector<Method> shown{std::begin(kAllMethods), std::end(kAllMethods)};

  [[nodiscard]] const HIndexResult& result(Method m) const;
  /// h of the first shown method.
  [[nodiscard]] std::size_t h() const;
};

enum class ReportFormat { Json, PlainText };

/// Runs every method. The trendline section is filled only when the linearity
/// gate passes.
MetricsReport build_report(const CitationProfile& profile);

std::string emit_report(const MetricsReport& report, ReportFormat format);

/// Fixed six decimal places, truncated rather than rounded.
std::string format_fixed6(double value);

}  // namespace hindex::report
