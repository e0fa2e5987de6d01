#pragma once

#include <span>
#include <string>
#include <vector>

#include "acm/model.hpp"
#include "acm/validate.hpp"

namespace acm {

struct TraceLink {
  Gid source_gid;
  Gid result_gid;
  std::string rule;

  friend bool operator==(const TraceLink&, const TraceLink&) = default;
};

struct TransformResult {
  Model model{Notation::sacm};
  std::vector<TraceLink> trace;
  std::vector<Diagnostic> warnings;
};

/// Maps a GSN document to SACM. Every element of the input yields exactly one
/// trace link. A Strategy becomes an ArgumentReasoning; the SupportedBy
/// connectors around it collapse into one AssertedInference running from the
/// goals below to the goal above. Other Goal-to-Goal SupportedBy connectors
/// become AssertedInference, Goal-to-Solution ones AssertedEvidence, both
/// flipped to point bottom-up. Elements outside the GSN metamodel are copied
/// under their own gid.
///
/// Throws PreconditionFailed (details = blocking diagnostics), StrategyDangling,
/// AmbiguousReasoning when a Strategy has several incoming SupportedBy.
TransformResult gsn_to_sacm(const Model& gsn);

/// Maps a CAE document to SACM. An Argument, its Supports edge and the
/// IsSubClaimOf edges it carries collapse into one AssertedInference with the
/// Argument's ArgumentReasoning attached. An IsSubClaimOf edge belongs to an
/// Argument when its reasoning names that Argument, or when it names none and
/// exactly one Argument supports the same parent claim.
///
/// Throws PreconditionFailed, ArgumentDangling, AmbiguousReasoning.
TransformResult cae_to_sacm(const Model& cae);

/// All results produced from `source_gid`, in trace order.
std::vector<Gid> trace_lookup(std::span<const TraceLink> links, std::string_view source_gid);

}  // namespace acm
