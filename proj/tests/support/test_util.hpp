#pragma once

#include <optional>
#include <set>
#include <string>

#include "acm/error.hpp"
#include "acm/validate.hpp"

namespace acm::testing {

/// The code of the acm::Error thrown by f, or nullopt when f returns.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::set<std::string> rule_ids(const std::vector<Diagnostic>& list) {
  std::set<std::string> out;
  for (const auto& d : list) out.insert(d.rule_id);
  return out;
}

}  // namespace acm::testing
