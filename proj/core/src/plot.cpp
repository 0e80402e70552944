#include "hindex/plot.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "hindex/error.hpp"
#include "hindex/report.hpp"

namespace hindex::plot {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 620.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 430.0;

struct Frame {
  double x_max;
  double y_max;

  [[nodiscard]] double sx(double x) const { return kLeft + x / x_max * (kRight - kLeft); }
  [[nodiscard]] double sy(double y) const { return kBottom - y / y_max * (kBottom - kTop); }
};

std::string num(double v) { return fmt::format("{:.3f}", v); }

std::string segment(const Frame& f, std::string_view cls, std::string_view stroke, double x1, double y1, double x2,
                    double y2, std::string_view extra = {}) {
  return fmt::format(R"(  <line class="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"{} />)"
                     "\n",
                     cls, num(f.sx(x1)), num(f.sy(y1)), num(f.sx(x2)), num(f.sy(y2)), stroke, extra);
}

// Rank whose citation point is nearest the journal line.
std::size_t closest_rank(const CitationProfile& profile) {
  std::size_t best = 1;
  for (std::size_t rank = 2; rank <= profile.size(); ++rank) {
    const auto d = std::llabs(profile.at_rank(rank) - static_cast<Citation>(rank));
    const auto b = std::llabs(profile.at_rank(best) - static_cast<Citation>(best));
    if (d < b) best = rank;
  }
  return best;
}

}  // namespace

std::string emit_plot_svg(const CitationProfile& profile, const geometry::GeometricTrace& trace,
                          const std::optional<geometry::LineFit>& fit) {
  const std::size_t n = profile.size();
  if (n == 0) throw Error(ErrorCode::EmptyProfile, "nothing to plot");

  const auto top = static_cast<double>(profile.at_rank(1));
  const Frame f{static_cast<double>(n) + 1.0, std::max(top, static_cast<double>(n)) + 1.0};

  std::string svg;
  svg += R"(<?xml version="1.0" encoding="UTF-8"?>)"
         "\n";
  svg += fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{1}" viewBox="0 0 {0} {1}">)"
      "\n",
      kWidth, kHeight);
  svg += fmt::format(
      R"(  <defs><clipPath id="plot-area"><rect x="{}" y="{}" width="{}" height="{}" /></clipPath></defs>)"
      "\n",
      kLeft, kTop, kRight - kLeft, kBottom - kTop);
  svg += R"(  <rect x="0" y="0" width="640" height="480" fill="white" />)"
         "\n";

  // Axes and labels.
  svg += fmt::format(R"(  <path class="axis" d="M {} {} L {} {} L {} {}" fill="none" stroke="black" />)"
                     "\n",
                     kLeft, kTop, kLeft, kBottom, kRight, kBottom);
  svg += fmt::format(R"(  <text x="{}" y="470" text-anchor="middle" font-size="14">Journal number</text>)"
                     "\n",
                     (kLeft + kRight) / 2);
  svg += fmt::format(
      R"svg(  <text x="18" y="{0}" text-anchor="middle" font-size="14" transform="rotate(-90 18 {0})">Citations</text>)svg"
      "\n",
      (kTop + kBottom) / 2);
  svg += fmt::format(R"(  <text x="{}" y="448" text-anchor="middle" font-size="11">{}</text>)"
                     "\n",
                     num(f.sx(f.x_max)), n + 1);
  svg += fmt::format(R"(  <text x="{}" y="{}" text-anchor="end" font-size="11">{}</text>)"
                     "\n",
                     kLeft - 4, num(f.sy(f.y_max) + 4), fmt::format("{}", f.y_max));
  svg += fmt::format(R"(  <text x="{}" y="448" text-anchor="middle" font-size="11">0</text>)"
                     "\n",
                     kLeft);

  const double diag = std::min(f.x_max, f.y_max);
  svg += segment(f, "journal-line", "blue", 0.0, 0.0, diag, diag, R"( stroke-width="1.5")");

  std::string points;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    if (!points.empty()) points += ' ';
    points += num(f.sx(static_cast<double>(rank))) + "," + num(f.sy(static_cast<double>(profile.at_rank(rank))));
  }
  svg += fmt::format(R"(  <polyline class="citations" points="{}" fill="none" stroke="brown" stroke-width="1.5" />)"
                     "\n",
                     points);

  std::optional<geometry::Point2> marker = trace.intersection;
  if (fit) {
    svg += segment(f, "trendline", "olive", 0.0, fit->at(0.0), f.x_max, fit->at(f.x_max),
                   R"svg( stroke-dasharray="6 3" clip-path="url(#plot-area)")svg");
    if (trace.kind == geometry::Case::FractionalIntersection && fit->slope != 1.0) {
      marker = geometry::intersect_with_identity(*fit);
    }
  }

  if (marker) {
    svg += fmt::format(
        R"(  <circle class="marker" cx="{}" cy="{}" r="4" fill="red" data-x="{}" data-y="{}" />)"
        "\n",
        num(f.sx(marker->x)), num(f.sy(marker->y)), report::format_fixed6(marker->x),
        report::format_fixed6(marker->y));
  } else {
    const std::size_t rank = trace.argmin_index.value_or(closest_rank(profile));
    const auto x = static_cast<double>(rank);
    const auto y = static_cast<double>(profile.at_rank(rank));
    svg += segment(f, "distance", "orange", x, x, x, y,
                   fmt::format(R"( stroke-width="2" data-rank="{}" data-length="{}")", rank, std::abs(y - x)));
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace hindex::plot
