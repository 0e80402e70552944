#include "hindex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "hindex/error.hpp"

namespace hindex::geometry {
namespace {

// Signed gap between the citation polyline and the journal line at a rank.
// Strictly decreasing in rank because citations are non-increasing.
std::int64_t gap_at(const CitationProfile& profile, std::size_t rank) {
  return profile.at_rank(rank) - static_cast<std::int64_t>(rank);
}

struct Clause {
  std::string label;
  std::size_t h;
};

// Integer intersection at abscissa x where the citation value is y. On the
// journal line x == y always holds, so only "i.a" is reachable.
Clause integer_clause(std::size_t x, Citation y) {
  const auto xi = static_cast<Citation>(x);
  if (xi == y) return {"i.a", x};
  if (xi > y) return {"i.b", x - 1};
  throw Error(ErrorCode::InvariantViolation,
              "integer intersection with x < y at x = " + std::to_string(x));
}

struct Classification {
  GeometricTrace trace;
  std::size_t h = 0;
};

Classification classify(const CitationProfile& profile) {
  const std::size_t n = profile.size();
  if (n == 0) throw Error(ErrorCode::EmptyProfile, "geometric analysis needs at least one paper");

  Classification out;
  GeometricTrace& trace = out.trace;

  // Gaps are strictly decreasing, so at most one rank sits on the line and the
  // positive ranks form a prefix.
  std::size_t last_above = 0;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    const auto gap = gap_at(profile, rank);
    if (gap == 0) {
      Clause clause = integer_clause(rank, profile.at_rank(rank));
      trace.kind = Case::IntegerIntersection;
      trace.intersection = Point2{static_cast<double>(rank), static_cast<double>(rank)};
      trace.postulate = std::move(clause.label);
      out.h = clause.h;
      return out;
    }
    if (gap > 0) last_above = rank;
  }

  if (last_above == n) {
    trace.kind = Case::EntirelyAbove;
    trace.postulate = "upper-bound";
    out.h = n;
    return out;
  }
  if (last_above == 0) {
    trace.kind = Case::EntirelyBelow;
    trace.postulate = "none";
    out.h = 0;
    return out;
  }

  // The segment from last_above to last_above + 1 goes from above to below y = x.
  const std::size_t k = last_above;
  const auto above = static_cast<double>(gap_at(profile, k));
  const auto below = static_cast<double>(gap_at(profile, k + 1));
  const double x_cross = static_cast<double>(k) + above / (above - below);
  const Point2 crossing{x_cross, x_cross};

  const LineFit fit = fit_profile(profile);
  if (trendline_applicable(profile, fit)) {
    trace.kind = Case::FractionalIntersection;
    trace.intersection = crossing;
    trace.postulate = "ii.a";
    out.h = k;  // == floor(x_cross), computed without rounding
    return out;
  }

  // Curvilinear profile: resolve by the minimum vertical distance.
  trace.kind = Case::NoCrossingMinDistance;
  trace.polyline_crossing = crossing;
  std::vector<double> distances;
  distances.reserve(n);
  std::uint64_t best = UINT64_MAX;
  std::size_t argmin = 0;
  bool argmin_reaches = false;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    const auto gap = gap_at(profile, rank);
    const auto d = static_cast<std::uint64_t>(gap < 0 ? -gap : gap);
    distances.push_back(static_cast<double>(d));
    const bool reaches = gap >= 0;
    // Ties prefer the first rank whose citations reach the journal number.
    if (d < best || (d == best && reaches && !argmin_reaches)) {
      best = d;
      argmin = rank;
      argmin_reaches = reaches;
    }
  }
  trace.distances = std::move(distances);
  trace.argmin_index = argmin;
  if (argmin_reaches) {
    trace.postulate = "iii.a";
    out.h = argmin;
  } else {
    trace.postulate = "iii.b";
    out.h = argmin - 1;
  }
  return out;
}

}  // namespace

std::string_view to_string(Case c) noexcept {
  switch (c) {
    case Case::IntegerIntersection: return "IntegerIntersection";
    case Case::FractionalIntersection: return "FractionalIntersection";
    case Case::NoCrossingMinDistance: return "NoCrossingMinDistance";
    case Case::EntirelyAbove: return "EntirelyAbove";
    case Case::EntirelyBelow: return "EntirelyBelow";
  }
  return "Unknown";
}

double euclidean_distance(Point2 p, Point2 q) noexcept { return std::hypot(q.x - p.x, q.y - p.y); }

LineFit fit_trendline(std::span<const Point2> points) {
  if (points.size() < 2) throw Error(ErrorCode::DegenerateFit, "trendline needs at least two points");

  const auto count = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - mean_x;
    const double dy = p.y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw Error(ErrorCode::DegenerateFit, "trendline needs at least two distinct x values");

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0.0;
    for (const auto& p : points) {
      const double r = p.y - fit.at(p.x);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

Point2 intersect_with_identity(const LineFit& fit) {
  if (fit.slope == 1.0) {
    if (fit.intercept == 0.0) throw Error(ErrorCode::CoincidentLines, "trendline coincides with y = x");
    throw Error(ErrorCode::ParallelLines, "trendline is parallel to y = x");
  }
  const double x = fit.intercept / (1.0 - fit.slope);
  return {x, x};
}

std::vector<double> vertical_distances(const CitationProfile& profile) {
  if (profile.empty()) throw Error(ErrorCode::EmptyProfile, "no papers to measure");
  std::vector<double> out;
  out.reserve(profile.size());
  for (std::size_t rank = 1; rank <= profile.size(); ++rank) {
    out.push_back(std::abs(static_cast<double>(gap_at(profile, rank))));
  }
  return out;
}

std::vector<Point2> citation_points(const CitationProfile& profile) {
  std::vector<Point2> points;
  points.reserve(profile.size());
  for (std::size_t rank = 1; rank <= profile.size(); ++rank) {
    points.push_back({static_cast<double>(rank), static_cast<double>(profile.at_rank(rank))});
  }
  return points;
}

LineFit fit_profile(const CitationProfile& profile) { return fit_trendline(citation_points(profile)); }

bool trendline_applicable(const CitationProfile& profile, const LineFit& fit) {
  const std::size_t n = profile.size();
  if (n < 2 || !(fit.slope < 1.0) || fit.r_squared < kLinearityThreshold) return false;
  const auto sorted = profile.sorted_desc();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (sorted[i] - sorted[i + 1] > static_cast<Citation>(n)) return false;
  }
  return true;
}

GeometricTrace classify_profile(const CitationProfile& profile) { return classify(profile).trace; }

GeometricResult geometric_h_index(const CitationProfile& profile) {
  GeometricResult out;
  out.result.method = Method::Geometric;
  if (profile.empty()) return out;

  Classification c = classify(profile);
  out.result.h = c.h;
  if (c.h > 0) out.result.pivot = c.h;
  out.trace = std::move(c.trace);
  return out;
}

double tolerant_floor(double x) noexcept {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < kIntegerTolerance) return nearest;
  return std::floor(x);
}

TrendlineEstimate estimate_h_via_trendline(const CitationProfile& profile) {
  if (profile.size() < 2) throw Error(ErrorCode::DegenerateFit, "trendline needs at least two papers");
  TrendlineEstimate est;
  est.fit = fit_profile(profile);
  if (!(est.fit.slope < 1.0)) {
    throw Error(ErrorCode::NotApplicable, "trendline slope must be below 1 to meet y = x from above");
  }
  est.intersection = intersect_with_identity(est.fit);
  const double floored = tolerant_floor(est.intersection.x);
  const auto n = static_cast<double>(profile.size());
  est.estimate = static_cast<std::size_t>(std::clamp(floored, 0.0, n));
  return est;
}

}  // namespace hindex::geometry
