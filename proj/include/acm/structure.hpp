#pragma once

#include <optional>
#include <string>

#include "acm/element.hpp"

namespace acm {

/// Authoring description of one GSN or CAE node.
struct NodeSpec {
  Kind kind = Kind::Goal;
  Gid gid;
  std::string name;
  std::string text;  // description; the statement for GSN Context
  bool undeveloped = false;
  bool uninstantiated = false;
  Gid referenced_artifact;
  Gid cited;  // makes the node a citation of this gid
  Gid module_ref;
  std::optional<Declaration> declaration;
  Gid owner;  // defaults to the module being built
};

/// Authoring description of one connector. Direction is the notation's own:
/// GSN connectors point from the supported element to the supporting one,
/// CAE connectors point from the supporting element to the supported one.
struct ConnectorSpec {
  Kind kind = Kind::SupportedBy;
  Gid source;
  Gid target;
  Gid gid;
  std::optional<ManyDecorator> many;
  bool optional = false;
  std::optional<ChoiceDecorator> choice;
};

}  // namespace acm
