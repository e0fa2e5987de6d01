#include "acm/error.hpp"

namespace acm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingElement: return "MissingElement";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::CitationCycle: return "CitationCycle";
    case ErrorCode::EmptyString: return "EmptyString";
    case ErrorCode::NoUriProperty: return "NoUriProperty";
    case ErrorCode::SelfReference: return "SelfReference";
    case ErrorCode::DuplicateGid: return "DuplicateGid";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::StrategyDangling: return "StrategyDangling";
    case ErrorCode::ArgumentDangling: return "ArgumentDangling";
    case ErrorCode::AmbiguousReasoning: return "AmbiguousReasoning";
    case ErrorCode::UnbalancedBraces: return "UnbalancedBraces";
    case ErrorCode::MissingBinding: return "MissingBinding";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::ChoiceOutOfRange: return "ChoiceOutOfRange";
    case ErrorCode::ExpressionDepth: return "ExpressionDepth";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DanglingReference: return "DanglingReference";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::string> subjects,
             std::vector<std::string> details)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      subjects_(std::move(subjects)),
      details_(std::move(details)) {}

}  // namespace acm
