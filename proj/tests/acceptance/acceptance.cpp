// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hindex/benchmark.hpp"
#include "hindex/geometry.hpp"
#include "hindex/io.hpp"
#include "hindex/metrics.hpp"
#include "../test_support.hpp"

#ifndef HINDEX_CLI_PATH
#error "HINDEX_CLI_PATH must point at the hindex executable"
#endif

namespace fs = std::filesystem;
using hindex::Citation;
using hindex::Method;
using hindex::normalize_profile;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome five_case_fixtures() {
  Outcome out;
  const auto t0 = Clock::now();
  for (const auto& uc : hindex::testing::use_cases()) {
    const auto p = normalize_profile(uc.citations);
    for (Method m : hindex::kAllMethods) {
      const auto h = hindex::compute_h_index(p, m).h;
      out.require(h == uc.h, std::string(uc.name) + " " + std::string(hindex::to_string(m)) + " gave " +
                                 std::to_string(h) + ", expected " + std::to_string(uc.h));
    }
  }
  const double elapsed = seconds_since(t0);
  out.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (out.ok) out.detail = "a1..a5 -> 5,3,2,3,6 by sort, count, oracle, geometric";
  return out;
}

Outcome trendline_reproduction() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto est = hindex::geometry::estimate_h_via_trendline(normalize_profile({10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1}));
  const double x = est.intersection.x;
  out.require(std::abs(est.fit.slope - -0.98182) <= 1e-4, "slope " + std::to_string(est.fit.slope));
  out.require(std::abs(est.fit.intercept - 11.1636) <= 1e-3, "intercept " + std::to_string(est.fit.intercept));
  out.require(std::abs(x - 5.633) <= 1e-3, "x* " + std::to_string(x));
  out.require(std::floor(x) == 5.0 && est.estimate == 5, "floor(x*) != 5");
  const double elapsed = seconds_since(t0);
  out.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (out.ok) {
    std::ostringstream ss;
    ss.precision(7);
    ss << "slope " << est.fit.slope << ", intercept " << est.fit.intercept << ", x* " << x << ", floor 5";
    out.detail = ss.str();
  }
  return out;
}

Outcome distance_tables() {
  Outcome out;
  struct Row {
    const char* name;
    std::vector<Citation> citations;
    std::vector<double> distances;
    double minimum;
  };
  const std::vector<Row> rows = {
      {"a2", {10, 9, 7, 3, 2, 1, 1}, {9, 7, 4, 1, 3, 5, 6}, 1},
      {"a4", {400, 300, 200, 2}, {399, 298, 197, 2}, 2},
  };
  for (const auto& row : rows) {
    const auto p = normalize_profile(row.citations);
    out.require(hindex::geometry::vertical_distances(p) == row.distances, std::string(row.name) + " distances");
    const auto g = hindex::geometry::geometric_h_index(p);
    const auto& t = *g.trace;
    out.require(t.kind == hindex::geometry::Case::NoCrossingMinDistance, std::string(row.name) + " case");
    out.require(t.distances && *t.distances == row.distances, std::string(row.name) + " trace distances");
    out.require(t.argmin_index == 4u, std::string(row.name) + " argmin");
    out.require(t.distances && (*t.distances)[3] == row.minimum, std::string(row.name) + " minimum");
    out.require(t.postulate == "iii.b", std::string(row.name) + " postulate " + t.postulate);
    out.require(g.result.h == 3, std::string(row.name) + " h " + std::to_string(g.result.h));
  }
  if (out.ok) out.detail = "a2 min 1 @4, a4 min 2 @4, h = 3 via iii.b";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  const auto t0 = Clock::now();
  constexpr int kCases = 10'000;
  hindex::testing::ProfileGenerator gen(0xC0FFEE);
  for (int i = 0; i < kCases && out.ok; ++i) {
    const auto p = normalize_profile(gen.next(200, 1'000'000));
    const auto expected = hindex::h_index_oracle(p).h;
    out.require(hindex::h_index_sort_scan(p).h == expected, "sort-scan mismatch at case " + std::to_string(i));
    out.require(hindex::h_index_counting(p).h == expected, "counting mismatch at case " + std::to_string(i));
    out.require(hindex::geometry::geometric_h_index(p).result.h == expected,
                "geometric mismatch at case " + std::to_string(i));
  }
  const double elapsed = seconds_since(t0);
  out.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  if (out.ok) out.detail = std::to_string(kCases) + " profiles in " + std::to_string(elapsed) + " s";
  return out;
}

std::size_t h_of(const std::vector<Citation>& raw) { return hindex::h_index_oracle(normalize_profile(raw)).h; }

Outcome invariant_suite() {
  Outcome out;
  constexpr int kCases = 1'000;
  hindex::testing::ProfileGenerator gen(0xBEEF);
  for (int i = 0; i < kCases && out.ok; ++i) {
    auto raw = gen.next();
    const auto h = h_of(raw);
    out.require(h <= raw.size(), "upper bound");

    auto shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
    out.require(h_of(shuffled) == h, "permutation invariance");

    if (!raw.empty()) {
      auto bumped = raw;
      bumped[gen.uniform<std::size_t>(0, raw.size() - 1)] += 1;
      out.require(h_of(bumped) >= h, "monotonicity");
    }

    auto clamped = raw;
    for (auto& c : clamped) c = std::min(c, static_cast<Citation>(raw.size()));
    out.require(h_of(clamped) == h, "clamp safety");
  }
  if (out.ok) out.detail = "bound, permutation, monotonicity, clamp over 1000 cases each";
  return out;
}

Outcome benchmark_sanity() {
  Outcome out;
  const auto t0 = Clock::now();
  hindex::bench::BenchmarkConfig cfg;
  cfg.sizes = {10'000, 100'000, 1'000'000};
  cfg.methods = {Method::Counting};
  cfg.runs = 5;
  cfg.seed = 42;
  try {
    const auto report = hindex::bench::run_benchmark(cfg);
    const auto text = hindex::bench::format_benchmark(report);
    out.require(!text.empty() && report.rows.size() == 3, "report incomplete");
    out.require(report.scaling.size() == 1, "no scaling fit");
    if (!report.scaling.empty()) {
      const double e = report.scaling.front().exponent;
      out.require(e >= 0.7 && e <= 1.3, "counting exponent " + std::to_string(e));
      if (out.ok) out.detail = "counting exponent " + std::to_string(e);
    }
  } catch (const std::exception& e) {
    out.require(false, e.what());
  }
  const double elapsed = seconds_since(t0);
  out.require(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
  return out;
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Tag balance check: every opened element is closed in order.
bool well_formed(const std::string& xml) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = xml.find('<', pos)) != std::string::npos) {
    const auto end = xml.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = xml.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    const auto name_end = tag.find_first_of(" \t\n");
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else {
      stack.push_back(tag.substr(0, name_end));
    }
  }
  return stack.empty();
}

Outcome cli_end_to_end() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / ("hindex_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = HINDEX_CLI_PATH;

  const auto a1 = dir / "a1.csv";
  std::ofstream(a1) << "10\n9\n8\n8\n7\n5\n4\n3\n2\n1\n1\n";
  const auto report = dir / "report.json";
  const int compute_rc = run("'" + cli + "' compute --input '" + a1.string() + "' --output json > '" +
                             report.string() + "'");
  const auto body = hindex::io::read_file(report);
  out.require(compute_rc == 0, "compute exit " + std::to_string(compute_rc));
  out.require(body.find("\"h\": 5") != std::string::npos, "missing \"h\": 5");
  out.require(body.find("\"agreement\": true") != std::string::npos, "missing \"agreement\": true");

  const auto svg1 = dir / "a1_1.svg";
  const auto svg2 = dir / "a1_2.svg";
  const int p1 = run("'" + cli + "' plot --input '" + a1.string() + "' --output '" + svg1.string() + "'");
  const int p2 = run("'" + cli + "' plot --input '" + a1.string() + "' --output '" + svg2.string() + "'");
  out.require(p1 == 0 && p2 == 0, "plot exit codes");
  if (p1 == 0 && p2 == 0) {
    const auto s1 = hindex::io::read_file(svg1);
    out.require(s1 == hindex::io::read_file(svg2), "SVG output not byte-identical");
    out.require(s1.find("<svg") != std::string::npos && well_formed(s1), "SVG not well formed");
  }

  const auto bad = dir / "bad.csv";
  std::ofstream(bad) << "10\n9\nnine\n";
  const int bad_rc = run("'" + cli + "' compute --input '" + bad.string() + "' > /dev/null 2>&1");
  out.require(bad_rc == 1, "malformed CSV exit " + std::to_string(bad_rc));

  fs::remove_all(dir);
  if (out.ok) out.detail = "compute json h=5 agreement=true; plot deterministic; malformed CSV -> 1";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"five-case fixture suite", five_case_fixtures},
      {"trendline reproduction (a1)", trendline_reproduction},
      {"distance tables (a2, a4)", distance_tables},
      {"oracle equivalence property", oracle_equivalence},
      {"invariant suite", invariant_suite},
      {"benchmark sanity", benchmark_sanity},
      {"CLI end-to-end", cli_end_to_end},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << name << "  -- " << o.detail << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
