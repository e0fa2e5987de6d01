#include "acm/artifact.hpp"

namespace acm {

namespace {

void require_package(const Model& model, std::string_view package, Kind family) {
  const Element& p = model.at(package);
  if (package_family(p.kind) != family) {
    throw Error(ErrorCode::KindMismatch,
                "'" + p.gid + "' is not a " + std::string(to_string(family)), {p.gid});
  }
}

const Element& require_asset(const Model& model, std::string_view gid) {
  const Element& e = model.at(gid);
  if (!e.is(Kind::ArtifactAsset)) {
    throw Error(ErrorCode::KindMismatch, "'" + e.gid + "' is not an ArtifactAsset", {e.gid});
  }
  return e;
}

}  // namespace

Gid add_asset(Model& model, std::string_view package, Kind kind, std::string_view name,
              std::string_view gid) {
  if (!is_asset_kind(kind)) {
    throw Error(ErrorCode::InvalidArgument, "unknown asset kind '" + std::string(to_string(kind)) + "'");
  }
  require_package(model, package, Kind::ArtifactPackage);
  Element e;
  e.gid = std::string(gid);
  e.kind = kind;
  e.owner = std::string(package);
  e.name = LangString{"en", std::string(name), {}};
  return model.add(std::move(e)).gid;
}

Gid add_asset(Model& model, std::string_view package, std::string_view kind, std::string_view name,
              std::string_view gid) {
  auto parsed = parse_kind(kind);
  if (!parsed || !is_asset_kind(*parsed)) {
    throw Error(ErrorCode::InvalidArgument, "unknown asset kind '" + std::string(kind) + "'");
  }
  return add_asset(model, package, *parsed, name, gid);
}

Gid add_property(Model& model, std::string_view owner, std::string_view name,
                 std::string_view description) {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "property name must not be empty");
  model.at(owner);
  Element e;
  e.kind = Kind::Property;
  e.owner = std::string(owner);
  e.name = LangString{"en", std::string(name), {}};
  if (!description.empty()) e.description = MultiLangString("en", description);
  return model.add(std::move(e)).gid;
}

const Element* find_property(const Model& model, std::string_view owner, std::string_view name) {
  for (const Element* child : model.children_of(owner)) {
    if (child->kind == Kind::Property && child->name && child->name->content == name) return child;
  }
  return nullptr;
}

void set_external_resource(Model& model, std::string_view asset, std::string_view uri) {
  require_asset(model, asset);
  if (const Element* existing = find_property(model, asset, kUriProperty)) {
    model.at(existing->gid).description = MultiLangString("en", uri);
    return;
  }
  add_property(model, asset, kUriProperty, uri);
}

void set_resource_query(Model& model, std::string_view asset, std::string_view lang,
                        std::string_view query) {
  require_asset(model, asset);
  const Element* existing = find_property(model, asset, kQueryProperty);
  Gid gid = existing ? existing->gid : add_property(model, asset, kQueryProperty, {});
  model.at(gid).description = MultiLangString(lang, query);
}

ResourceResolution resolve_external_resource(const Model& model, std::string_view asset,
                                             const std::filesystem::path& base_dir) {
  require_asset(model, asset);
  const Element* uri = find_property(model, asset, kUriProperty);
  if (uri == nullptr || uri->description.empty()) {
    throw Error(ErrorCode::NoUriProperty, "'" + std::string(asset) + "' has no URI property",
                {std::string(asset)});
  }
  ResourceResolution out;
  out.uri = uri->description.values().front().content;
  std::filesystem::path p(out.uri);
  out.path = p.is_relative() ? base_dir / p : p;
  std::error_code ec;
  out.exists = std::filesystem::is_regular_file(out.path, ec);
  return out;
}

Gid relate_assets(Model& model, std::span<const Gid> sources, std::span<const Gid> targets,
                  std::optional<std::string_view> purpose) {
  if (sources.empty() || targets.empty()) {
    throw Error(ErrorCode::InvalidArgument, "relationship needs at least one source and one target");
  }
  for (const auto& gid : sources) require_asset(model, gid);
  for (const auto& gid : targets) require_asset(model, gid);
  Element e;
  e.kind = Kind::ArtifactAssetRelationship;
  e.owner = owning_package(model, sources.front());
  e.sources.assign(sources.begin(), sources.end());
  e.targets.assign(targets.begin(), targets.end());
  Gid gid = model.add(std::move(e)).gid;
  if (purpose) add_property(model, gid, kPurposeProperty, *purpose);
  return gid;
}

Gid add_group(Model& model, std::string_view package, Kind kind, std::string_view name,
              std::span<const Gid> members) {
  if (kind != Kind::ArtifactGroup && kind != Kind::TerminologyGroup) {
    throw Error(ErrorCode::InvalidArgument, "not a group kind");
  }
  require_package(model, package,
                  kind == Kind::ArtifactGroup ? Kind::ArtifactPackage : Kind::TerminologyPackage);
  for (const auto& m : members) model.at(m);
  Element e;
  e.kind = kind;
  e.owner = std::string(package);
  if (!name.empty()) e.name = LangString{"en", std::string(name), {}};
  e.members.assign(members.begin(), members.end());
  return model.add(std::move(e)).gid;
}

}  // namespace acm
