#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace acm {

enum class Notation { sacm, gsn, cae };

std::string_view to_string(Notation notation);
std::optional<Notation> parse_notation(std::string_view text);

// Metaclasses of SACM and of the SACM-compliant GSN and CAE metamodels. The
// first block holds abstract metaclasses, which exist only for is_a() queries.
enum class Kind {
  Element,
  ArtifactElement,
  ArtifactAsset,
  TerminologyAsset,
  ExpressionElement,
  ArgumentAsset,
  Assertion,
  AssertedRelationship,

  AssuranceCasePackage,
  AssuranceCasePackageInterface,
  AssuranceCasePackageBinding,

  ArtifactPackage,
  ArtifactPackageInterface,
  ArtifactPackageBinding,
  ArtifactGroup,
  Artifact,
  Activity,
  Event,
  Participant,
  Technique,
  Resource,
  ArtifactAssetRelationship,
  Property,

  TerminologyPackage,
  TerminologyInterface,
  TerminologyPackageBinding,
  TerminologyGroup,
  Category,
  Term,
  Expression,

  ArgumentPackage,
  ArgumentPackageInterface,
  ArgumentPackageBinding,
  Claim,
  ArtifactReference,
  ArgumentReasoning,
  AssertedInference,
  AssertedEvidence,
  AssertedContext,
  AssertedArtifactSupport,
  AssertedArtifactContext,

  GsnModule,
  ContractModule,
  Goal,
  Assumption,
  Justification,
  AwayGoal,
  Solution,
  AwaySolution,
  AwayContext,
  ModuleReference,
  ContractModuleReference,
  Context,
  SupportedBy,
  InContextOf,
  Strategy,

  CaeModule,
  CaeModuleInterface,
  CaeModuleBinding,
  CaeClaim,
  CaeAssumption,
  Argument,
  Evidence,
  IsEvidenceFor,
  IsSubClaimOf,
  Supports,
};

struct KindInfo {
  Kind kind;
  std::string_view name;
  std::optional<Kind> parent;
  Notation notation;
  bool is_abstract;
};

const KindInfo& info(Kind kind);
std::span<const KindInfo> all_kinds();

std::string_view to_string(Kind kind);
/// Concrete (instantiable) kinds only.
std::optional<Kind> parse_kind(std::string_view name);

/// True when `kind` is `base` or transitively specialises it.
bool is_a(Kind kind, Kind base);

bool is_package(Kind kind);
bool is_interface(Kind kind);
bool is_binding(Kind kind);
/// The root package metaclass of the family `kind` belongs to
/// (AssuranceCasePackage, ArgumentPackage, ArtifactPackage, TerminologyPackage).
std::optional<Kind> package_family(Kind kind);
bool is_relationship(Kind kind);
bool is_asset_kind(Kind kind);

/// A concrete kind may appear in a document of `notation`. GSN and CAE
/// documents reuse the SACM packaging, artifact and terminology metaclasses
/// but not SACM's own argumentation metaclasses.
bool allowed_in(Kind kind, Notation notation);

enum class Declaration { asserted, needsSupport, assumed, axiomatic, defeated, asCited };

std::string_view to_string(Declaration declaration);
std::optional<Declaration> parse_declaration(std::string_view text);

}  // namespace acm
