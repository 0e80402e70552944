#include "hindex/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "hindex/error.hpp"

namespace hindex::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  const auto first = std::find_if(s.begin(), s.end(), not_space);
  const auto last = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return first < last ? std::string_view(first, last) : std::string_view{};
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason, line);
}

Citation parse_count(std::string_view field, std::size_t line, std::size_t index) {
  field = trim(field);
  if (field.empty()) parse_fail(line, "missing citation count");
  Citation value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc::result_out_of_range) parse_fail(line, "citation count out of range");
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    parse_fail(line, "not an integer: '" + std::string(field) + "'");
  }
  if (value < 0) {
    throw Error(ErrorCode::NegativeCitation,
                "line " + std::to_string(line) + ": negative citation count " + std::to_string(value), index);
  }
  return value;
}

bool is_header(std::string_view line) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) return false;
  return trim(line.substr(0, comma)) == "paper_id" && trim(line.substr(comma + 1)) == "citations";
}

std::vector<Citation> parse_csv(std::string_view input) {
  // Strip a UTF-8 byte order mark.
  if (input.starts_with("\xEF\xBB\xBF")) input.remove_prefix(3);

  std::vector<Citation> out;
  std::unordered_set<std::string> ids;
  bool two_column = false;
  bool seen_first = false;
  std::size_t line_no = 0;

  while (!input.empty()) {
    ++line_no;
    const auto eol = input.find('\n');
    std::string_view line = input.substr(0, eol);
    input.remove_prefix(eol == std::string_view::npos ? input.size() : eol + 1);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (trim(line).empty()) continue;

    if (!seen_first) {
      seen_first = true;
      if (is_header(line)) {
        two_column = true;
        continue;
      }
      if (line.find(',') != std::string_view::npos) {
        parse_fail(line_no, "two-column CSV requires a 'paper_id,citations' header");
      }
    }

    if (!two_column) {
      if (line.find(',') != std::string_view::npos) parse_fail(line_no, "unexpected ',' in single-column CSV");
      out.push_back(parse_count(line, line_no, out.size()));
      continue;
    }

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) parse_fail(line_no, "expected 'paper_id,citations'");
    const auto rest = line.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos) parse_fail(line_no, "too many columns");
    const auto id = trim(line.substr(0, comma));
    if (id.empty()) parse_fail(line_no, "empty paper_id");
    const Citation count = parse_count(rest, line_no, out.size());
    if (!ids.emplace(id).second) {
      throw Error(ErrorCode::DuplicatePaperId,
                  "line " + std::to_string(line_no) + ": duplicate paper_id '" + std::string(id) + "'", line_no);
    }
    out.push_back(count);
  }
  return out;
}

std::vector<Citation> parse_json(std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "JSON input must be an array of integers", 0);

  std::vector<Citation> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& v = doc[i];
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) {
        throw Error(ErrorCode::ParseError, "element " + std::to_string(i) + " out of range", i);
      }
      out.push_back(static_cast<Citation>(u));
    } else if (v.is_number_integer()) {
      const auto s = v.get<std::int64_t>();
      if (s < 0) {
        throw Error(ErrorCode::NegativeCitation,
                    "element " + std::to_string(i) + ": negative citation count " + std::to_string(s), i);
      }
      out.push_back(s);
    } else {
      throw Error(ErrorCode::ParseError,
                  "element " + std::to_string(i) + " is not an integer: " + v.dump(), i);
    }
  }
  return out;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "csv") return InputFormat::Csv;
  if (name == "json") return InputFormat::Json;
  throw Error(ErrorCode::ParseError, "unknown input format '" + std::string(name) + "'");
}

InputFormat infer_input_format(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".json" ? InputFormat::Json : InputFormat::Csv;
}

std::vector<Citation> parse_citations(std::string_view input, InputFormat format) {
  return format == InputFormat::Json ? parse_json(input) : parse_csv(input);
}

std::string to_json_array(std::span<const Citation> citations) {
  return nlohmann::json(std::vector<Citation>(citations.begin(), citations.end())).dump();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace hindex::io
