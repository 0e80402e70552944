#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hindex/profile.hpp"

namespace hindex::io {

enum class InputFormat { Csv, Json };

/// "csv" or "json"; throws Error(ParseError) otherwise.
InputFormat parse_input_format(std::string_view name);

/// Picks the format from a file extension, defaulting to CSV.
InputFormat infer_input_format(const std::filesystem::path& path);

/**
 * Reads citation counts in file order.
 *
 * CSV comes in two shapes: one integer per line with no header, or a
 * `paper_id,citations` header followed by two-column rows whose ids must be
 * unique. LF and CRLF line endings are accepted and blank lines are skipped.
 * JSON must be a flat array of non-negative integers.
 *
 * Errors: ParseError with the 1-based line (CSV) or byte offset / element
 * index (JSON), NegativeCitation, DuplicatePaperId.
 */
std::vector<Citation> parse_citations(std::string_view input, InputFormat format);

/// Compact JSON array of the counts; parse_citations(..., Json) reads it back.
std::string to_json_array(std::span<const Citation> citations);

/// Throws Error(ParseError) when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace hindex::io
