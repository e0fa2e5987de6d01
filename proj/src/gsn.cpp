#include "acm/gsn.hpp"

#include <algorithm>
#include <set>

namespace acm {

namespace {

bool goal_like(Kind k) { return k == Kind::Goal || k == Kind::AwayGoal; }

bool supporting_for_goal(Kind k) {
  return goal_like(k) || k == Kind::Strategy || k == Kind::Solution || k == Kind::AwaySolution ||
         k == Kind::ModuleReference || k == Kind::ContractModuleReference;
}

bool contextual(Kind k) {
  return k == Kind::Context || k == Kind::AwayContext || k == Kind::Assumption ||
         k == Kind::Justification;
}

std::string arrow(const Element& from, const Element& to) {
  return std::string(to_string(from.kind)) + " -> " + std::string(to_string(to.kind));
}

}  // namespace

bool is_gsn_node(Kind kind) {
  switch (kind) {
    case Kind::Goal:
    case Kind::Assumption:
    case Kind::Justification:
    case Kind::AwayGoal:
    case Kind::Solution:
    case Kind::AwaySolution:
    case Kind::AwayContext:
    case Kind::ModuleReference:
    case Kind::ContractModuleReference:
    case Kind::Context:
    case Kind::Strategy:
      return true;
    default:
      return false;
  }
}

Element make_node(const NodeSpec& spec, std::string_view default_owner) {
  Element e;
  e.gid = spec.gid;
  e.kind = spec.kind;
  e.owner = spec.owner.empty() ? std::string(default_owner) : spec.owner;
  if (!spec.name.empty()) e.name = LangString{"en", spec.name, {}};
  if (!spec.text.empty()) {
    if (spec.kind == Kind::Context) {
      e.statement = spec.text;
    } else {
      e.description = MultiLangString("en", spec.text);
    }
  }
  e.undeveloped = spec.undeveloped;
  e.is_abstract = spec.uninstantiated;
  e.referenced_artifact = spec.referenced_artifact;
  e.module_ref = spec.module_ref;
  if (!spec.cited.empty()) {
    e.is_citation = true;
    e.cited_element = spec.cited;
    if (e.is(Kind::Claim)) e.declaration = Declaration::asCited;
  }
  if (spec.kind == Kind::CaeAssumption) e.declaration = Declaration::assumed;
  if (spec.declaration) e.declaration = *spec.declaration;
  return e;
}

Element make_connector(const ConnectorSpec& spec, std::string_view owner) {
  Element e;
  e.gid = spec.gid;
  e.kind = spec.kind;
  e.owner = std::string(owner);
  e.sources = {spec.source};
  e.targets = {spec.target};
  e.many = spec.many;
  e.is_optional = spec.optional;
  e.choice = spec.choice;
  return e;
}

std::optional<std::string> gsn_connector_violation(const Model& model, const Element& c) {
  if (c.kind != Kind::SupportedBy && c.kind != Kind::InContextOf) return std::nullopt;
  const std::string name(to_string(c.kind));
  if (c.sources.size() != 1 || c.targets.size() != 1) {
    return name + ": needs exactly one source and one target";
  }
  const Element* from = model.find(c.sources.front());
  const Element* to = model.find(c.targets.front());
  if (from == nullptr || to == nullptr) return std::nullopt;
  bool ok = false;
  if (c.kind == Kind::SupportedBy) {
    ok = (from->kind == Kind::Goal && supporting_for_goal(to->kind)) ||
         (from->kind == Kind::Strategy && goal_like(to->kind));
  } else {
    ok = (from->kind == Kind::Goal || from->kind == Kind::Strategy) && contextual(to->kind);
  }
  if (ok) return std::nullopt;
  return name + ": " + arrow(*from, *to) + " is not a permitted connection";
}

void build_goal_structure(Model& model, std::string_view module, std::span<const NodeSpec> nodes,
                          std::span<const ConnectorSpec> connectors) {
  if (model.at(module).kind != Kind::GsnModule) {
    throw Error(ErrorCode::KindMismatch, "'" + std::string(module) + "' is not a GsnModule",
                {std::string(module)});
  }
  Model staged = model;
  for (const auto& node : nodes) {
    if (!is_gsn_node(node.kind)) {
      throw Error(ErrorCode::KindMismatch,
                  std::string(to_string(node.kind)) + " is not a GSN node kind", {node.gid});
    }
    staged.add(make_node(node, module));
  }
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    const auto& spec = connectors[i];
    if (spec.kind != Kind::SupportedBy && spec.kind != Kind::InContextOf) {
      throw Error(ErrorCode::KindMismatch, "connector #" + std::to_string(i) + ": " +
                                               std::string(to_string(spec.kind)) +
                                               " is not a GSN connector");
    }
    staged.at(spec.source);
    staged.at(spec.target);
    Element c = make_connector(spec, module);
    if (auto v = gsn_connector_violation(staged, c)) {
      throw Error(ErrorCode::KindMismatch, "connector #" + std::to_string(i) + ": " + *v,
                  {spec.source, spec.target});
    }
    staged.add(std::move(c));
  }
  model = std::move(staged);
}

std::vector<Gid> roots(const Model& model, std::string_view module) {
  std::set<std::string_view> supported;
  for (const auto& e : model.elements()) {
    if (e.kind == Kind::SupportedBy) {
      for (const auto& t : e.targets) supported.insert(t);
    }
  }
  std::vector<Gid> out;
  for (const auto& e : model.elements()) {
    if (e.kind == Kind::Goal && model.owned_by(e.gid, module) && !supported.contains(e.gid)) {
      out.push_back(e.gid);
    }
  }
  return out;
}

}  // namespace acm
