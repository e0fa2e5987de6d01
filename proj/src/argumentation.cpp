#include "acm/argumentation.hpp"

#include <algorithm>
#include <array>

namespace acm {

namespace {

using KindTest = bool (*)(Kind);

struct EndpointRule {
  Kind kind;
  KindTest source_ok;
  std::string_view source_expected;
  KindTest target_ok;
  std::string_view target_expected;
};

bool assertion(Kind k) { return is_a(k, Kind::Assertion); }
bool artifact_reference(Kind k) { return is_a(k, Kind::ArtifactReference); }
bool context_source(Kind k) { return assertion(k) || artifact_reference(k); }
bool context_target(Kind k) { return assertion(k) || is_a(k, Kind::ArgumentReasoning); }
bool artifact_asset(Kind k) { return is_a(k, Kind::ArtifactAsset); }
bool cae_evidence(Kind k) { return k == Kind::Evidence; }
bool cae_claim(Kind k) { return k == Kind::CaeClaim; }
bool cae_sub_claim(Kind k) { return k == Kind::CaeClaim || k == Kind::CaeAssumption; }
bool cae_argument(Kind k) { return k == Kind::Argument; }

// Looked up by exact kind first, so CAE connectors override their SACM parents.
constexpr std::array kRules = {
    EndpointRule{Kind::IsEvidenceFor, cae_evidence, "Evidence", cae_claim, "CAEClaim"},
    EndpointRule{Kind::IsSubClaimOf, cae_sub_claim, "CAEClaim", cae_claim, "CAEClaim"},
    EndpointRule{Kind::Supports, cae_argument, "Argument", cae_claim, "CAEClaim"},
    EndpointRule{Kind::AssertedInference, assertion, "Assertion", assertion, "Assertion"},
    EndpointRule{Kind::AssertedEvidence, artifact_reference, "ArtifactReference", assertion, "Assertion"},
    EndpointRule{Kind::AssertedContext, context_source, "Assertion or ArtifactReference", context_target,
                 "Assertion or ArgumentReasoning"},
    EndpointRule{Kind::AssertedArtifactSupport, artifact_reference, "ArtifactReference",
                 artifact_reference, "ArtifactReference"},
    EndpointRule{Kind::AssertedArtifactContext, artifact_reference, "ArtifactReference",
                 artifact_reference, "ArtifactReference"},
    EndpointRule{Kind::ArtifactAssetRelationship, artifact_asset, "ArtifactAsset", artifact_asset,
                 "ArtifactAsset"},
};

const EndpointRule* rule_for(Kind kind) {
  if (info(kind).notation == Notation::gsn) return nullptr;
  for (const auto& r : kRules) {
    if (r.kind == kind) return &r;
  }
  for (const auto& r : kRules) {
    if (is_a(kind, r.kind)) return &r;
  }
  return nullptr;
}

const Element& require(const Model& model, std::string_view gid, Kind kind) {
  const Element& e = model.at(gid);
  if (!e.is(kind)) {
    throw Error(ErrorCode::KindMismatch,
                "'" + e.gid + "' is a " + std::string(to_string(e.kind)) + ", not a " +
                    std::string(to_string(kind)),
                {e.gid});
  }
  return e;
}

void require_argument_package(const Model& model, std::string_view package) {
  const Element& p = model.at(package);
  if (package_family(p.kind) != Kind::ArgumentPackage) {
    throw Error(ErrorCode::KindMismatch, "'" + p.gid + "' is not an ArgumentPackage", {p.gid});
  }
}

Element argument_asset(Model& model, std::string_view package, Kind kind, std::string_view name,
                       std::string_view description, std::string_view gid) {
  require_argument_package(model, package);
  Element e;
  e.gid = std::string(gid);
  e.kind = kind;
  e.owner = std::string(package);
  if (!name.empty()) e.name = LangString{"en", std::string(name), {}};
  if (!description.empty()) e.description = MultiLangString("en", description);
  return e;
}

}  // namespace

Gid add_claim(Model& model, std::string_view package, std::string_view name,
              std::string_view description, Declaration declaration, std::string_view gid) {
  Element e = argument_asset(model, package, Kind::Claim, name, description, gid);
  e.declaration = declaration;
  return model.add(std::move(e)).gid;
}

Gid add_claim(Model& model, std::string_view package, std::string_view name,
              std::string_view description, std::string_view declaration, std::string_view gid) {
  auto d = parse_declaration(declaration);
  if (!d) throw Error(ErrorCode::InvalidArgument, "unknown declaration '" + std::string(declaration) + "'");
  return add_claim(model, package, name, description, *d, gid);
}

Gid add_artifact_reference(Model& model, std::string_view package, std::string_view name,
                           std::string_view referenced_artifact, std::string_view gid) {
  if (!referenced_artifact.empty()) require(model, referenced_artifact, Kind::ArtifactElement);
  Element e = argument_asset(model, package, Kind::ArtifactReference, name, {}, gid);
  e.referenced_artifact = std::string(referenced_artifact);
  return model.add(std::move(e)).gid;
}

Gid add_reasoning(Model& model, std::string_view package, std::string_view name,
                  std::string_view description, std::string_view gid) {
  return model.add(argument_asset(model, package, Kind::ArgumentReasoning, name, description, gid)).gid;
}

Gid add_relationship(Model& model, std::string_view package, Kind kind, std::span<const Gid> sources,
                     std::span<const Gid> targets, bool is_counter, std::string_view gid) {
  if (!is_a(kind, Kind::AssertedRelationship) || info(kind).notation == Notation::gsn) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(kind)) + " is not an asserted relationship kind");
  }
  if (sources.empty() || targets.empty()) {
    throw Error(ErrorCode::InvalidArgument, "relationship needs at least one source and one target");
  }
  for (const auto& g : sources) model.at(g);
  for (const auto& g : targets) model.at(g);
  Element e = argument_asset(model, package, kind, {}, {}, gid);
  e.sources.assign(sources.begin(), sources.end());
  e.targets.assign(targets.begin(), targets.end());
  e.is_counter = is_counter;
  if (auto violation = endpoint_violation(model, e)) {
    throw Error(ErrorCode::KindMismatch, *violation);
  }
  return model.add(std::move(e)).gid;
}

bool attach_reasoning(Model& model, std::string_view relationship, std::string_view reasoning) {
  require(model, reasoning, Kind::ArgumentReasoning);
  Element& rel = model.at(relationship);
  if (!rel.is(Kind::AssertedRelationship)) {
    throw Error(ErrorCode::KindMismatch, "'" + rel.gid + "' is not an AssertedRelationship", {rel.gid});
  }
  const bool replaced = !rel.reasoning.empty() && rel.reasoning != reasoning;
  rel.reasoning = std::string(reasoning);
  return replaced;
}

void attach_meta_claim(Model& model, std::string_view assertion_gid, std::string_view meta) {
  require(model, meta, Kind::Claim);
  Element& a = model.at(assertion_gid);
  if (!a.is(Kind::Assertion)) {
    throw Error(ErrorCode::KindMismatch, "'" + a.gid + "' is not an Assertion", {a.gid});
  }
  if (assertion_gid == meta) {
    throw Error(ErrorCode::SelfReference, "'" + a.gid + "' cannot be its own meta-claim", {a.gid});
  }
  if (std::ranges::find(a.meta_claims, meta) == a.meta_claims.end()) {
    a.meta_claims.emplace_back(meta);
  }
}

std::optional<std::string> endpoint_violation(const Model& model, const Element& relationship) {
  const EndpointRule* rule = rule_for(relationship.kind);
  if (rule == nullptr) return std::nullopt;
  const std::string name(to_string(relationship.kind));
  if (relationship.sources.empty()) return name + ": needs at least one source";
  if (relationship.targets.empty()) return name + ": needs at least one target";
  auto check = [&](const std::vector<Gid>& ends, KindTest ok, std::string_view expected,
                   std::string_view role) -> std::optional<std::string> {
    for (const auto& gid : ends) {
      const Element* e = model.find(gid);
      if (e != nullptr && !ok(e->kind)) {
        return name + ": " + std::string(role) + " '" + gid + "' is a " +
               std::string(to_string(e->kind)) + ", expected " + std::string(expected);
      }
    }
    return std::nullopt;
  };
  if (auto v = check(relationship.sources, rule->source_ok, rule->source_expected, "source")) return v;
  if (auto v = check(relationship.targets, rule->target_ok, rule->target_expected, "target")) return v;
  if (!relationship.reasoning.empty()) {
    const Element* r = model.find(relationship.reasoning);
    if (r != nullptr && !r->is(Kind::ArgumentReasoning)) {
      return name + ": reasoning '" + r->gid + "' is not an ArgumentReasoning";
    }
  }
  return std::nullopt;
}

}  // namespace acm
