#include "hindex/error.hpp"

#include <utility>

namespace hindex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeCitation: return "NegativeCitation";
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicatePaperId: return "DuplicatePaperId";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::InvalidRunCount: return "InvalidRunCount";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::optional<std::size_t> location)
    : std::runtime_error(std::move(message)), code_(code), location_(location) {}

}  // namespace hindex
