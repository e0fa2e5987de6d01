#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acm/model.hpp"
#include "acm/transform.hpp"
#include "acm/validate.hpp"

namespace acm {

struct RoleBinding {
  std::string role;
  std::vector<std::string> values;  // one value, or one per replica
};

/// How a decorated connector is expanded. Exactly one member is meaningful,
/// matching the connector's decorator.
struct ConnectorChoice {
  std::optional<int> count;                  // Many
  std::optional<bool> chosen;                // Optional
  std::optional<std::vector<Gid>> subset;    // Choice: connector gids kept
};

struct BindingTable {
  std::vector<RoleBinding> entries;
  /// Keyed by connector gid; a Choice may also be keyed by its group name.
  std::map<std::string, ConnectorChoice> connectors;

  [[nodiscard]] const RoleBinding* find(std::string_view role) const;
};

/// Labels of every "{role}" in names, descriptions, contents, statements,
/// notes and values of abstract elements, plus those of Expressions
/// referenced from them. Throws UnbalancedBraces naming the element.
std::set<std::string> extract_roles(const Model& pattern);

struct InstantiationResult {
  Model model;
  std::vector<TraceLink> trace;
};

/// Produces a concrete document from a pattern document.
///
/// Abstract elements are copied under a new gid with roles substituted,
/// is_abstract cleared, abstract_form pointing at the original and
/// implementation constraints dropped. Concrete elements keep their gid.
/// A Many connector with count n replicates the subtree hanging from its
/// supporting end n times; inside replica i a role bound to n values takes
/// the i-th. Optional connectors with chosen=false disappear with their
/// subtree, and so do Choice alternatives outside the chosen subset.
///
/// Throws MissingBinding, CountMismatch, ChoiceOutOfRange, UnbalancedBraces.
InstantiationResult instantiate(const Model& pattern, const BindingTable& table);

/// INST-E1 for residual placeholders, INST-E2 for elements still abstract,
/// INST-E3 for abstract_form links that do not resolve into `pattern`.
std::vector<Diagnostic> verify_instantiation(const Model& concrete, const Model& pattern);

}  // namespace acm
