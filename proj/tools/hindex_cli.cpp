// hindex: compute, plot and benchmark h-index methods from the command line.
//
//   hindex compute --input a1.csv --output json
//   hindex plot --input a1.csv --output a1.svg --trendline auto
//   hindex bench --sizes 10000,100000,1000000 --methods sort,count
//
// Exit codes: 0 success, 1 input or usage error, 2 methods disagree.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hindex/benchmark.hpp"
#include "hindex/error.hpp"
#include "hindex/geometry.hpp"
#include "hindex/io.hpp"
#include "hindex/plot.hpp"
#include "hindex/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;

struct InputOptions {
  std::string path;
  std::string format;  // empty: infer from extension
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--input", in.path, "Citation file, or '-' for stdin")->required();
  cmd.add_option("--format", in.format, "Input format")->check(CLI::IsMember({"csv", "json"}));
}

hindex::CitationProfile load_profile(const InputOptions& in) {
  std::string body;
  if (in.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    body = ss.str();
  } else {
    body = hindex::io::read_file(in.path);
  }
  const auto format =
      in.format.empty() ? hindex::io::infer_input_format(in.path) : hindex::io::parse_input_format(in.format);
  return hindex::normalize_profile(hindex::io::parse_citations(body, format));
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hindex::Error(hindex::ErrorCode::ParseError, "cannot write '" + path + "'");
  out << body;
}

int run_compute(const InputOptions& in, const std::string& method, const std::string& output) {
  const auto profile = load_profile(in);
  auto report = hindex::report::build_report(profile);
  if (method != "all") report.shown = {hindex::parse_method(method)};
  const auto format = output == "json" ? hindex::report::ReportFormat::Json : hindex::report::ReportFormat::PlainText;
  std::cout << hindex::report::emit_report(report, format);
  if (!report.agreement) {
    std::cerr << "error: h-index methods disagree on this input\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int run_plot(const InputOptions& in, const std::string& output, const std::string& trendline) {
  using namespace hindex::geometry;
  const auto profile = load_profile(in);
  const auto trace = classify_profile(profile);

  std::optional<LineFit> fit;
  if (trendline == "on") {
    fit = fit_profile(profile);
  } else if (trendline == "auto" && profile.size() >= 2) {
    const auto candidate = fit_profile(profile);
    if (trendline_applicable(profile, candidate)) fit = candidate;
  }
  write_output(output, hindex::plot::emit_plot_svg(profile, trace, fit));
  return kExitOk;
}

int run_bench(const std::string& sizes, const std::string& methods, std::size_t runs, std::uint64_t seed) {
  hindex::bench::BenchmarkConfig config;
  config.runs = runs;
  config.seed = seed;
  for (const auto& s : split_commas(sizes)) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || v <= 0) {
      throw hindex::Error(hindex::ErrorCode::InvalidSize, "invalid size '" + s + "'");
    }
    config.sizes.push_back(static_cast<std::size_t>(v));
  }
  for (const auto& m : split_commas(methods)) config.methods.push_back(hindex::parse_method(m));
  std::cout << hindex::bench::format_benchmark(hindex::bench::run_benchmark(config));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h-index toolkit: exact methods, Cartesian construction and benchmarks"};
  app.require_subcommand(1);

  InputOptions compute_in;
  std::string compute_method = "all";
  std::string compute_output = "text";
  auto* compute = app.add_subcommand("compute", "Compute the h-index by every method");
  add_input_options(*compute, compute_in);
  compute->add_option("--method", compute_method, "Method to report")
      ->check(CLI::IsMember({"sort", "count", "oracle", "geometric", "all"}));
  compute->add_option("--output", compute_output, "Report format")->check(CLI::IsMember({"json", "text"}));

  InputOptions plot_in;
  std::string plot_output = "-";
  std::string plot_trendline = "auto";
  auto* plot = app.add_subcommand("plot", "Render the Cartesian construction as SVG");
  add_input_options(*plot, plot_in);
  plot->add_option("--output", plot_output, "SVG path, or '-' for stdout");
  plot->add_option("--trendline", plot_trendline, "Draw the least-squares trendline")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  std::string bench_sizes = "10000,100000,1000000";
  std::string bench_methods = "sort,count";
  std::size_t bench_runs = hindex::bench::kMinRuns;
  std::uint64_t bench_seed = 42;
  auto* bench = app.add_subcommand("bench", "Time the methods and fit their scaling exponents");
  bench->add_option("--sizes", bench_sizes, "Comma-separated profile sizes");
  bench->add_option("--methods", bench_methods, "Comma-separated methods");
  bench->add_option("--runs", bench_runs, "Timed runs per size and method");
  bench->add_option("--seed", bench_seed, "Seed for generated profiles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*compute) return run_compute(compute_in, compute_method, compute_output);
    if (*plot) return run_plot(plot_in, plot_output, plot_trendline);
    if (*bench) return run_bench(bench_sizes, bench_methods, bench_runs, bench_seed);
  } catch (const hindex::Error& e) {
    std::cerr << "error [" << hindex::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == hindex::ErrorCode::InvariantViolation ? kExitDisagreement : kExitInput;
  }
  return kExitOk;
}
