#include "acm/kind.hpp"

#include <algorithm>
#include <array>

namespace acm {

namespace {

using enum Kind;
constexpr auto S = Notation::sacm;
constexpr auto G = Notation::gsn;
constexpr auto C = Notation::cae;

constexpr std::array kKinds = {
    KindInfo{Element, "Element", std::nullopt, S, true},
    KindInfo{ArtifactElement, "ArtifactElement", Element, S, true},
    KindInfo{ArtifactAsset, "ArtifactAsset", ArtifactElement, S, true},
    KindInfo{TerminologyAsset, "TerminologyAsset", ArtifactElement, S, true},
    KindInfo{ExpressionElement, "ExpressionElement", TerminologyAsset, S, true},
    KindInfo{ArgumentAsset, "ArgumentAsset", ArtifactElement, S, true},
    KindInfo{Assertion, "Assertion", ArgumentAsset, S, true},
    KindInfo{AssertedRelationship, "AssertedRelationship", Assertion, S, true},

    KindInfo{AssuranceCasePackage, "AssuranceCasePackage", ArtifactElement, S, false},
    KindInfo{AssuranceCasePackageInterface, "AssuranceCasePackageInterface", AssuranceCasePackage, S, false},
    KindInfo{AssuranceCasePackageBinding, "AssuranceCasePackageBinding", AssuranceCasePackage, S, false},

    KindInfo{ArtifactPackage, "ArtifactPackage", ArtifactElement, S, false},
    KindInfo{ArtifactPackageInterface, "ArtifactPackageInterface", ArtifactPackage, S, false},
    KindInfo{ArtifactPackageBinding, "ArtifactPackageBinding", ArtifactPackage, S, false},
    KindInfo{ArtifactGroup, "ArtifactGroup", ArtifactElement, S, false},
    KindInfo{Artifact, "Artifact", ArtifactAsset, S, false},
    KindInfo{Activity, "Activity", ArtifactAsset, S, false},
    KindInfo{Event, "Event", ArtifactAsset, S, false},
    KindInfo{Participant, "Participant", ArtifactAsset, S, false},
    KindInfo{Technique, "Technique", ArtifactAsset, S, false},
    KindInfo{Resource, "Resource", ArtifactAsset, S, false},
    KindInfo{ArtifactAssetRelationship, "ArtifactAssetRelationship", ArtifactAsset, S, false},
    KindInfo{Property, "Property", ArtifactElement, S, false},

    KindInfo{TerminologyPackage, "TerminologyPackage", ArtifactElement, S, false},
    KindInfo{TerminologyInterface, "TerminologyInterface", TerminologyPackage, S, false},
    KindInfo{TerminologyPackageBinding, "TerminologyPackageBinding", TerminologyPackage, S, false},
    KindInfo{TerminologyGroup, "TerminologyGroup", ArtifactElement, S, false},
    KindInfo{Category, "Category", TerminologyAsset, S, false},
    KindInfo{Term, "Term", ExpressionElement, S, false},
    KindInfo{Expression, "Expression", ExpressionElement, S, false},

    KindInfo{ArgumentPackage, "ArgumentPackage", ArtifactElement, S, false},
    KindInfo{ArgumentPackageInterface, "ArgumentPackageInterface", ArgumentPackage, S, false},
    KindInfo{ArgumentPackageBinding, "ArgumentPackageBinding", ArgumentPackage, S, false},
    KindInfo{Claim, "Claim", Assertion, S, false},
    KindInfo{ArtifactReference, "ArtifactReference", ArgumentAsset, S, false},
    KindInfo{ArgumentReasoning, "ArgumentReasoning", ArgumentAsset, S, false},
    KindInfo{AssertedInference, "AssertedInference", AssertedRelationship, S, false},
    KindInfo{AssertedEvidence, "AssertedEvidence", AssertedRelationship, S, false},
    KindInfo{AssertedContext, "AssertedContext", AssertedRelationship, S, false},
    KindInfo{AssertedArtifactSupport, "AssertedArtifactSupport", AssertedRelationship, S, false},
    KindInfo{AssertedArtifactContext, "AssertedArtifactContext", AssertedRelationship, S, false},

    KindInfo{GsnModule, "GsnModule", ArgumentPackage, G, false},
    KindInfo{ContractModule, "ContractModule", ArgumentPackageBinding, G, false},
    KindInfo{Goal, "Goal", Claim, G, false},
    KindInfo{Assumption, "Assumption", Claim, G, false},
    KindInfo{Justification, "Justification", Claim, G, false},
    KindInfo{AwayGoal, "AwayGoal", Claim, G, false},
    KindInfo{Solution, "Solution", ArtifactReference, G, false},
    KindInfo{AwaySolution, "AwaySolution", ArtifactReference, G, false},
    KindInfo{AwayContext, "AwayContext", ArtifactReference, G, false},
    KindInfo{ModuleReference, "ModuleReference", ArtifactReference, G, false},
    KindInfo{ContractModuleReference, "ContractModuleReference", ArtifactReference, G, false},
    KindInfo{Context, "Context", ArgumentAsset, G, false},
    KindInfo{SupportedBy, "SupportedBy", AssertedInference, G, false},
    KindInfo{InContextOf, "InContextOf", AssertedContext, G, false},
    KindInfo{Strategy, "Strategy", ArgumentReasoning, G, false},

    KindInfo{CaeModule, "CAEModule", ArgumentPackage, C, false},
    KindInfo{CaeModuleInterface, "CAEModuleInterface", ArgumentPackageInterface, C, false},
    KindInfo{CaeModuleBinding, "CAEModuleBinding", ArgumentPackageBinding, C, false},
    KindInfo{CaeClaim, "CAEClaim", Claim, C, false},
    KindInfo{CaeAssumption, "CaeAssumption", Claim, C, false},
    KindInfo{Argument, "Argument", ArgumentReasoning, C, false},
    KindInfo{Evidence, "Evidence", ArtifactReference, C, false},
    KindInfo{IsEvidenceFor, "IsEvidenceFor", AssertedEvidence, C, false},
    KindInfo{IsSubClaimOf, "IsSubClaimOf", AssertedInference, C, false},
    KindInfo{Supports, "Supports", AssertedInference, C, false},
};

constexpr bool table_matches_enum() {
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    if (static_cast<std::size_t>(kKinds[i].kind) != i) return false;
  }
  return true;
}
static_assert(table_matches_enum(), "kind table out of order");

}  // namespace

std::string_view to_string(Notation notation) {
  switch (notation) {
    case Notation::sacm: return "sacm";
    case Notation::gsn: return "gsn";
    case Notation::cae: return "cae";
  }
  return "sacm";
}

std::optional<Notation> parse_notation(std::string_view text) {
  if (text == "sacm") return Notation::sacm;
  if (text == "gsn") return Notation::gsn;
  if (text == "cae") return Notation::cae;
  return std::nullopt;
}

const KindInfo& info(Kind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

std::span<const KindInfo> all_kinds() { return kKinds; }

std::string_view to_string(Kind kind) { return info(kind).name; }

std::optional<Kind> parse_kind(std::string_view name) {
  auto it = std::ranges::find(kKinds, name, &KindInfo::name);
  if (it == kKinds.end() || it->is_abstract) return std::nullopt;
  return it->kind;
}

bool is_a(Kind kind, Kind base) {
  for (std::optional<Kind> k = kind; k; k = info(*k).parent) {
    if (*k == base) return true;
  }
  return false;
}

std::optional<Kind> package_family(Kind kind) {
  for (Kind root : {AssuranceCasePackage, ArgumentPackage, ArtifactPackage, TerminologyPackage}) {
    if (is_a(kind, root)) return root;
  }
  return std::nullopt;
}

bool is_package(Kind kind) { return package_family(kind).has_value(); }

bool is_interface(Kind kind) {
  return is_a(kind, AssuranceCasePackageInterface) || is_a(kind, ArgumentPackageInterface) ||
         is_a(kind, ArtifactPackageInterface) || is_a(kind, TerminologyInterface);
}

bool is_binding(Kind kind) {
  return is_a(kind, AssuranceCasePackageBinding) || is_a(kind, ArgumentPackageBinding) ||
         is_a(kind, ArtifactPackageBinding) || is_a(kind, TerminologyPackageBinding);
}

bool is_relationship(Kind kind) {
  return is_a(kind, AssertedRelationship) || kind == ArtifactAssetRelationship;
}

bool is_asset_kind(Kind kind) {
  return kind == Artifact || kind == Activity || kind == Event || kind == Participant ||
         kind == Technique || kind == Resource;
}

bool allowed_in(Kind kind, Notation notation) {
  const KindInfo& k = info(kind);
  if (k.is_abstract) return false;
  if (k.notation == notation) return true;
  if (k.notation != Notation::sacm) return false;
  const bool sacm_argumentation =
      is_a(kind, ArgumentAsset) || package_family(kind) == ArgumentPackage;
  return !sacm_argumentation;
}

std::string_view to_string(Declaration declaration) {
  switch (declaration) {
    case Declaration::asserted: return "asserted";
    case Declaration::needsSupport: return "needsSupport";
    case Declaration::assumed: return "assumed";
    case Declaration::axiomatic: return "axiomatic";
    case Declaration::defeated: return "defeated";
    case Declaration::asCited: return "asCited";
  }
  return "asserted";
}

std::optional<Declaration> parse_declaration(std::string_view text) {
  for (auto d : {Declaration::asserted, Declaration::needsSupport, Declaration::assumed,
                 Declaration::axiomatic, Declaration::defeated, Declaration::asCited}) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

}  // namespace acm
