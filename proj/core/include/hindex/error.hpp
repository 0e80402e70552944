#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hindex {

enum class ErrorCode {
  NegativeCitation,
  EmptyProfile,
  DegenerateFit,
  ParallelLines,
  CoincidentLines,
  NotApplicable,
  ParseError,
  DuplicatePaperId,
  InvalidSize,
  InvalidRunCount,
  UnknownMethod,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception. `location` carries
// the element index, line number or byte offset when the error has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::optional<std::size_t> location = std::nullopt);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<std::size_t> location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> location_;
};

}  // namespace hindex
