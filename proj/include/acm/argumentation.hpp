#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "acm/model.hpp"

namespace acm {

Gid add_claim(Model& model, std::string_view package, std::string_view name,
              std::string_view description, Declaration declaration = Declaration::asserted,
              std::string_view gid = {});
/// Throws InvalidArgument on an unknown declaration name.
Gid add_claim(Model& model, std::string_view package, std::string_view name,
              std::string_view description, std::string_view declaration, std::string_view gid = {});

Gid add_artifact_reference(Model& model, std::string_view package, std::string_view name,
                           std::string_view referenced_artifact, std::string_view gid = {});

Gid add_reasoning(Model& model, std::string_view package, std::string_view name,
                  std::string_view description, std::string_view gid = {});

/// Creates an AssertedRelationship of `kind` after checking the endpoint-kind
/// table. Throws MissingElement, KindMismatch (naming the violated rule),
/// InvalidArgument for a non-relationship kind or empty endpoint lists.
Gid add_relationship(Model& model, std::string_view package, Kind kind, std::span<const Gid> sources,
                     std::span<const Gid> targets, bool is_counter = false, std::string_view gid = {});

/// Attaches an ArgumentReasoning; returns true when a previous one was replaced.
bool attach_reasoning(Model& model, std::string_view relationship, std::string_view reasoning);

/// Records `meta` as a meta-claim about `assertion`.
/// Throws KindMismatch, SelfReference.
void attach_meta_claim(Model& model, std::string_view assertion, std::string_view meta);

/// Endpoint-kind check for SACM asserted relationships and
/// ArtifactAssetRelationship. Unresolved endpoints are skipped. Returns the
/// violated rule as text, or nullopt.
std::optional<std::string> endpoint_violation(const Model& model, const Element& relationship);

}  // namespace acm
