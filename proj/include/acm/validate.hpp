#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acm/model.hpp"

namespace acm {

enum class Severity { error, warning };
std::string_view to_string(Severity severity);

struct Diagnostic {
  std::string rule_id;
  Severity severity = Severity::error;
  std::vector<Gid> element_gids;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct RuleInfo {
  std::string_view id;
  Severity severity;
  std::string_view summary;
};

/// Every rule id any diagnostic may carry.
std::span<const RuleInfo> rule_catalog();
const RuleInfo* find_rule(std::string_view id);

/// Builds a diagnostic whose severity comes from the catalog.
Diagnostic make_diagnostic(std::string_view rule_id, std::vector<Gid> gids, std::string message);

/// Runs the well-formedness catalog. Pure and deterministic; ordered by
/// (rule_id, first element gid, message).
std::vector<Diagnostic> check(const Model& model);

bool has_errors(std::span<const Diagnostic> diagnostics);
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

/// "<severity> <rule_id> <gid,...> <message>"
std::string format_diagnostic(const Diagnostic& diagnostic);

enum class ClaimStatus { supported, unsupported, assumed, axiomatic, defeated };
std::string_view to_string(ClaimStatus status);

/// ArtifactReference gid -> evidence currently valid.
using EvidenceStatus = std::map<Gid, bool, std::less<>>;

struct Evaluation {
  std::map<Gid, ClaimStatus> statuses;  // every Claim of the document
  std::vector<Diagnostic> warnings;
};

/// Bottom-up status propagation over inference and evidence edges of a SACM
/// document. Counter edges whose sources all hold defeat their target.
/// Unknown evidence counts as invalid and is reported (EVAL-W1).
/// Throws PreconditionFailed when check() reports errors or the document is
/// not SACM; CitationCycle/MissingElement for broken asCited chains.
Evaluation evaluate(const Model& model, const EvidenceStatus& evidence);

/// Claims that support nothing: not a relationship source, not cited, not a
/// meta-claim. Document order.
std::vector<Gid> root_claims(const Model& model);

/// supported, assumed or axiomatic.
bool holds(ClaimStatus status);

}  // namespace acm
