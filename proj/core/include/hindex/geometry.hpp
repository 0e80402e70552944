#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hindex/profile.hpp"

// Cartesian construction of the h-index. The journal-number line is y = x over
// 1-based ranks; the citation polyline runs through (rank, sorted_desc[rank]).

namespace hindex::geometry {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;

  [[nodiscard]] double at(double x) const noexcept { return slope * x + intercept; }
};

enum class Case {
  IntegerIntersection,
  FractionalIntersection,
  NoCrossingMinDistance,
  EntirelyAbove,
  EntirelyBelow,
};

std::string_view to_string(Case c) noexcept;

struct GeometricTrace {
  Case kind = Case::EntirelyBelow;
  /// Set for the two intersection cases.
  std::optional<Point2> intersection;
  /// |sorted_desc[i] - i| for every rank; set only for NoCrossingMinDistance.
  std::optional<std::vector<double>> distances;
  /// 1-based rank of the minimum distance; set only for NoCrossingMinDistance.
  std::optional<std::size_t> argmin_index;
  /// Where the polyline crosses y = x between two ranks, when it does. Kept for
  /// curvilinear profiles that are resolved by the distance rule instead.
  std::optional<Point2> polyline_crossing;
  std::string postulate;
};

/// Result of applying the postulate engine. `trace` is empty for the empty profile.
struct GeometricResult {
  HIndexResult result;
  std::optional<GeometricTrace> trace;
};

/// Trendline approximation of h. Not guaranteed to match the exact h.
struct TrendlineEstimate {
  std::size_t estimate = 0;
  LineFit fit;
  Point2 intersection;
};

/// Minimum coefficient of determination for treating citations as a straight line.
inline constexpr double kLinearityThreshold = 0.95;
/// Tolerance under which a computed coordinate counts as an integer.
inline constexpr double kIntegerTolerance = 1e-9;

double euclidean_distance(Point2 p, Point2 q) noexcept;

/// Ordinary least squares on vertical residuals. r_squared is 1 when all y are equal.
/// Throws Error(DegenerateFit) for fewer than two points or a single distinct x.
LineFit fit_trendline(std::span<const Point2> points);

/// Throws Error(ParallelLines) or Error(CoincidentLines) when slope == 1.
Point2 intersect_with_identity(const LineFit& fit);

/// Throws Error(EmptyProfile) for n == 0.
std::vector<double> vertical_distances(const CitationProfile& profile);

/// Points (rank, sorted_desc[rank]) for rank = 1..n.
std::vector<Point2> citation_points(const CitationProfile& profile);

/// Trendline of the citation points. Requires n >= 2.
LineFit fit_profile(const CitationProfile& profile);

/// True when the profile is close enough to a straight line for the trendline to
/// stand in for it: n >= 2, slope < 1, r_squared >= kLinearityThreshold and no
/// single drop between consecutive ranks exceeds n.
bool trendline_applicable(const CitationProfile& profile, const LineFit& fit);

/// Throws Error(EmptyProfile) for n == 0.
GeometricTrace classify_profile(const CitationProfile& profile);

GeometricResult geometric_h_index(const CitationProfile& profile);

/// Floor of the trendline / identity intersection, clamped into [0, n].
/// Throws Error(DegenerateFit) for n < 2 and Error(NotApplicable) when slope >= 1.
TrendlineEstimate estimate_h_via_trendline(const CitationProfile& profile);

/// Floor that snaps values within kIntegerTolerance of an integer onto it.
double tolerant_floor(double x) noexcept;

}  // namespace hindex::geometry
