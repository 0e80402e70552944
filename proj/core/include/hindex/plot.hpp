#pragma once

#include <optional>
#include <string>

#include "hindex/geometry.hpp"
#include "hindex/profile.hpp"

namespace hindex::plot {

/**
 * Renders the Cartesian construction as a standalone SVG 1.1 document
 * (640x480 viewBox): the journal line y = x, the citation polyline, the
 * trendline when `fit` is given, and either the intersection marker or the
 * vertical segment at the closest rank.
 *
 * With a trendline and a fractional crossing the marker sits where the
 * trendline meets y = x; otherwise it sits at the trace's intersection.
 * Output depends only on the arguments. Throws Error(EmptyProfile) for n == 0.
 */
std::string emit_plot_svg(const CitationProfile& profile, const geometry::GeometricTrace& trace,
                          const std::optional<geometry::LineFit>& fit);

}  // namespace hindex::plot
