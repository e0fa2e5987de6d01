#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acm {

enum class ErrorCode {
  InvalidArgument,
  MissingElement,
  KindMismatch,
  CitationCycle,
  EmptyString,
  NoUriProperty,
  SelfReference,
  DuplicateGid,
  PreconditionFailed,
  StrategyDangling,
  ArgumentDangling,
  AmbiguousReasoning,
  UnbalancedBraces,
  MissingBinding,
  CountMismatch,
  ChoiceOutOfRange,
  ExpressionDepth,
  ParseError,
  SchemaError,
  DanglingReference,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `subjects()` carries the machine
/// readable payload of the failure: offending gids for model errors, the
/// JSON path for SchemaError, {line, column} for ParseError. `details()`
/// holds extra report lines (e.g. blocking diagnostics).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> subjects = {},
        std::vector<std::string> details = {});

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] const std::vector<std::string>& subjects() const noexcept { return subjects_; }
  [[nodiscard]] const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> subjects_;
  std::vector<std::string> details_;
};

}  // namespace acm
