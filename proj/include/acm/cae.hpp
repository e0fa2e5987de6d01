#pragma once

#include <span>

#include "acm/model.hpp"
#include "acm/structure.hpp"

namespace acm {

bool is_cae_node(Kind kind);

/// Adds `nodes` and `connectors` (IsEvidenceFor, IsSubClaimOf, Supports) to
/// the CAEModule `module`. CaeAssumption nodes default to `assumed`.
/// Throws KindMismatch naming the connector index, MissingElement.
void build_cae_structure(Model& model, std::string_view module, std::span<const NodeSpec> nodes,
                         std::span<const ConnectorSpec> connectors);

}  // namespace acm
