#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "acm/model.hpp"

namespace acm {

// Property names used for external references.
inline constexpr std::string_view kUriProperty = "URI";
inline constexpr std::string_view kQueryProperty = "QUERY";
inline constexpr std::string_view kPurposeProperty = "purpose";

/// Kind must be one of Artifact, Activity, Event, Participant, Technique,
/// Resource. Throws InvalidArgument otherwise.
Gid add_asset(Model& model, std::string_view package, Kind kind, std::string_view name,
              std::string_view gid = {});
Gid add_asset(Model& model, std::string_view package, std::string_view kind, std::string_view name,
              std::string_view gid = {});

/// Adds a Property owned by `owner`.
Gid add_property(Model& model, std::string_view owner, std::string_view name,
                 std::string_view description);

/// The first Property under `owner` whose name content equals `name`.
const Element* find_property(const Model& model, std::string_view owner, std::string_view name);

/// Attaches (or replaces) the "URI" Property of an ArtifactAsset.
void set_external_resource(Model& model, std::string_view asset, std::string_view uri);
/// Records a finer-grained query against the external resource. Stored, never executed.
void set_resource_query(Model& model, std::string_view asset, std::string_view lang,
                        std::string_view query);

struct ResourceResolution {
  std::string uri;
  std::filesystem::path path;
  bool exists = false;
};

/// Resolves the URI Property against `base_dir` when relative and probes the
/// filesystem. Throws NoUriProperty.
ResourceResolution resolve_external_resource(const Model& model, std::string_view asset,
                                             const std::filesystem::path& base_dir);

/// Creates an ArtifactAssetRelationship owned by the package of the first
/// source. Throws InvalidArgument on empty endpoint lists, MissingElement,
/// KindMismatch when an endpoint is not an ArtifactAsset.
Gid relate_assets(Model& model, std::span<const Gid> sources, std::span<const Gid> targets,
                  std::optional<std::string_view> purpose = std::nullopt);

/// ArtifactGroup or TerminologyGroup.
Gid add_group(Model& model, std::string_view package, Kind kind, std::string_view name,
              std::span<const Gid> members);

}  // namespace acm
