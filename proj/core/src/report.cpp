#include "hindex/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "hindex/error.hpp"
#include "hindex/metrics.hpp"

namespace hindex::report {
namespace {

std::size_t slot(Method m) {
  for (std::size_t i = 0; i < std::size(kAllMethods); ++i) {
    if (kAllMethods[i] == m) return i;
  }
  throw Error(ErrorCode::UnknownMethod, "method outside the known set");
}

std::string point_text(const geometry::Point2& p) {
  return "(" + format_fixed6(p.x) + ", " + format_fixed6(p.y) + ")";
}

nlohmann::ordered_json point_json(const std::optional<geometry::Point2>& p) {
  if (!p) return nullptr;
  return nlohmann::ordered_json::array({p->x, p->y});
}

std::string emit_json(const MetricsReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = r.summary.n;
  doc["h"] = r.h();
  ordered_json methods = ordered_json::object();
  for (Method m : r.shown) methods[std::string(to_string(m))] = r.result(m).h;
  doc["methods"] = std::move(methods);
  if (r.trace) {
    doc["case"] = std::string(geometry::to_string(r.trace->kind));
    doc["postulate"] = r.trace->postulate;
  } else {
    doc["case"] = nullptr;
    doc["postulate"] = nullptr;
  }
  doc["intersection"] = point_json(r.trace ? r.trace->intersection : std::nullopt);
  if (r.trace && r.trace->distances) {
    doc["distances"] = *r.trace->distances;
  } else {
    doc["distances"] = nullptr;
  }
  doc["agreement"] = r.agreement;

  if (r.trace && r.trace->argmin_index) {
    doc["argmin"] = *r.trace->argmin_index;
  } else {
    doc["argmin"] = nullptr;
  }
  doc["polyline_crossing"] = point_json(r.trace ? r.trace->polyline_crossing : std::nullopt);
  if (r.trendline) {
    const auto& t = r.trendline->estimate;
    doc["trendline"] = ordered_json{{"slope", t.fit.slope},
                                    {"intercept", t.fit.intercept},
                                    {"r_squared", t.fit.r_squared},
                                    {"intersection", point_json(t.intersection)},
                                    {"estimate", t.estimate},
                                    {"matches_exact", r.trendline->matches_exact}};
  } else {
    doc["trendline"] = nullptr;
  }
  doc["summary"] = ordered_json{{"min", r.summary.min_citations},
                                {"max", r.summary.max_citations},
                                {"total", r.summary.total_citations}};
  return doc.dump(2) + "\n";
}

std::string emit_text(const MetricsReport& r) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{}: {}\n", key, value);
  };

  line("papers", fmt::format("{} (citations min {}, max {}, total {})", r.summary.n, r.summary.min_citations,
                             r.summary.max_citations, r.summary.total_citations));
  line("h-index", std::to_string(r.h()));
  std::string methods;
  for (Method m : r.shown) {
    if (!methods.empty()) methods += ' ';
    methods += fmt::format("{}={}", to_string(m), r.result(m).h);
  }
  line("methods", methods);
  line("agreement", r.agreement ? "yes" : "NO - methods disagree");

  if (r.trace) {
    const auto& t = *r.trace;
    line("case", std::string(geometry::to_string(t.kind)));
    line("postulate", t.postulate);
    if (t.intersection) line("intersection", point_text(*t.intersection));
    if (t.polyline_crossing) line("polyline crossing", point_text(*t.polyline_crossing));
    if (t.distances) {
      std::string d;
      for (double v : *t.distances) {
        if (!d.empty()) d += ", ";
        d += fmt::format("{}", v);
      }
      line("distances", "[" + d + "]");
    }
    if (t.argmin_index) line("minimum distance at journal", std::to_string(*t.argmin_index));
  }
  if (r.trendline) {
    const auto& e = r.trendline->estimate;
    line("trendline", fmt::format("y = {}x + {} (r^2 = {})", format_fixed6(e.fit.slope), format_fixed6(e.fit.intercept),
                                  format_fixed6(e.fit.r_squared)));
    line("trendline intersection", point_text(e.intersection));
    line("trendline estimate",
         fmt::format("{} ({})", e.estimate, r.trendline->matches_exact ? "matches exact h" : "differs from exact h"));
  }
  return out;
}

}  // namespace

const HIndexResult& MetricsReport::result(Method m) const { return results[slot(m)]; }

std::size_t MetricsReport::h() const { return result(shown.empty() ? Method::Oracle : shown.front()).h; }

MetricsReport build_report(const CitationProfile& profile) {
  MetricsReport r;
  const auto raw = profile.raw();
  r.summary.n = profile.size();
  if (!raw.empty()) {
    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    r.summary.min_citations = *lo;
    r.summary.max_citations = *hi;
    r.summary.total_citations = std::accumulate(raw.begin(), raw.end(), Citation{0});
  }

  r.results[slot(Method::SortScan)] = h_index_sort_scan(profile);
  r.results[slot(Method::Counting)] = h_index_counting(profile);
  r.results[slot(Method::Oracle)] = h_index_oracle(profile);
  auto geometric = geometry::geometric_h_index(profile);
  r.results[slot(Method::Geometric)] = geometric.result;
  r.trace = std::move(geometric.trace);

  const std::size_t exact = r.results[slot(Method::Oracle)].h;
  r.agreement = std::all_of(r.results.begin(), r.results.end(),
                            [exact](const HIndexResult& x) { return x.h == exact; });

  if (profile.size() >= 2) {
    const auto fit = geometry::fit_profile(profile);
    if (geometry::trendline_applicable(profile, fit)) {
      TrendlineSection section;
      section.estimate = geometry::estimate_h_via_trendline(profile);
      section.matches_exact = section.estimate.estimate == exact;
      r.trendline = section;
    }
  }
  return r;
}

std::string emit_report(const MetricsReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? emit_json(report) : emit_text(report);
}

std::string format_fixed6(double value) {
  if (!std::isfinite(value)) return fmt::format("{}", value);
  // Format with three guard digits, then cut them off.
  std::string s = fmt::format("{:.9f}", value);
  s.resize(s.size() - 3);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace hindex::report
