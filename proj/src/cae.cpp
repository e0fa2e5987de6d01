#include "acm/cae.hpp"

#include "acm/argumentation.hpp"
#include "acm/gsn.hpp"

namespace acm {

bool is_cae_node(Kind kind) {
  return kind == Kind::CaeClaim || kind == Kind::CaeAssumption || kind == Kind::Argument ||
         kind == Kind::Evidence;
}

void build_cae_structure(Model& model, std::string_view module, std::span<const NodeSpec> nodes,
                         std::span<const ConnectorSpec> connectors) {
  const Kind module_kind = model.at(module).kind;
  if (!is_package(module_kind) || info(module_kind).notation != Notation::cae) {
    throw Error(ErrorCode::KindMismatch, "'" + std::string(module) + "' is not a CAEModule",
                {std::string(module)});
  }
  Model staged = model;
  for (const auto& node : nodes) {
    if (!is_cae_node(node.kind)) {
      throw Error(ErrorCode::KindMismatch,
                  std::string(to_string(node.kind)) + " is not a CAE node kind", {node.gid});
    }
    staged.add(make_node(node, module));
  }
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    const auto& spec = connectors[i];
    if (spec.kind != Kind::IsEvidenceFor && spec.kind != Kind::IsSubClaimOf &&
        spec.kind != Kind::Supports) {
      throw Error(ErrorCode::KindMismatch, "connector #" + std::to_string(i) + ": " +
                                               std::string(to_string(spec.kind)) +
                                               " is not a CAE connector");
    }
    staged.at(spec.source);
    staged.at(spec.target);
    Element c = make_connector(spec, module);
    if (auto v = endpoint_violation(staged, c)) {
      throw Error(ErrorCode::KindMismatch, "connector #" + std::to_string(i) + ": " + *v,
                  {spec.source, spec.target});
    }
    staged.add(std::move(c));
  }
  model = std::move(staged);
}

}  // namespace acm
