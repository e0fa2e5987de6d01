#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acm/model.hpp"
#include "acm/structure.hpp"

namespace acm {

bool is_gsn_node(Kind kind);

/// Adds `nodes` and `connectors` to the GsnModule `module`. All connectors
/// are checked against the SupportedBy/InContextOf tables before anything is
/// added. Throws KindMismatch naming the connector index, MissingElement.
void build_goal_structure(Model& model, std::string_view module, std::span<const NodeSpec> nodes,
                          std::span<const ConnectorSpec> connectors);

/// Goals owned by `module` that no SupportedBy points at, in document order.
std::vector<Gid> roots(const Model& model, std::string_view module);

/// Endpoint-kind check for SupportedBy and InContextOf. Unresolved endpoints
/// are skipped. Returns the violated rule as text, or nullopt.
std::optional<std::string> gsn_connector_violation(const Model& model, const Element& connector);

/// Creates the element for a GSN/CAE node without adding it.
Element make_node(const NodeSpec& spec, std::string_view default_owner);
Element make_connector(const ConnectorSpec& spec, std::string_view owner);

}  // namespace acm
