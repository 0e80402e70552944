#include "hindex/profile.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "hindex/error.hpp"

namespace hindex {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::SortScan: return "sort";
    case Method::Counting: return "count";
    case Method::Oracle: return "oracle";
    case Method::Geometric: return "geometric";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::UnknownMethod, "unknown method '" + std::string(name) + "'");
}

CitationProfile CitationProfile::from_raw(std::vector<Citation> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) {
      throw Error(ErrorCode::NegativeCitation,
                  "negative citation count " + std::to_string(raw[i]) + " at index " + std::to_string(i),
                  i);
    }
  }
  CitationProfile profile;
  profile.sorted_desc_ = raw;
  std::sort(profile.sorted_desc_.begin(), profile.sorted_desc_.end(), std::greater<>{});
  profile.raw_ = std::move(raw);
  return profile;
}

CitationProfile normalize_profile(std::vector<Citation> raw) {
  return CitationProfile::from_raw(std::move(raw));
}

}  // namespace hindex
