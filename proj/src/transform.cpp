#include "acm/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace acm {

namespace {

constexpr std::string_view kResultSuffix = ".sacm";
constexpr std::string_view kInferenceSuffix = ".inference";

void require_valid(const Model& input, Notation expected) {
  if (input.notation() != expected) {
    throw Error(ErrorCode::PreconditionFailed, "expected a " + std::string(to_string(expected)) +
                                                   " document, got " +
                                                   std::string(to_string(input.notation())));
  }
  const auto diagnostics = check(input);
  if (!has_errors(diagnostics)) return;
  std::vector<Gid> subjects;
  std::vector<std::string> details;
  for (const auto& d : diagnostics) {
    if (d.severity != Severity::error) continue;
    if (!d.element_gids.empty()) subjects.push_back(d.element_gids.front());
    details.push_back(format_diagnostic(d));
  }
  throw Error(ErrorCode::PreconditionFailed,
              std::to_string(details.size()) + " validation error(s) block the transformation",
              subjects, details);
}

void set_tag(Element& e, std::string_view key, std::string_view value) {
  e.tagged_values.push_back(TaggedValue{std::string(key), MultiLangString("en", value)});
}

// Collects output elements and links, then rewrites every reference from
// input gids to result gids in one pass.
class Builder {
 public:
  Element carry(const Element& src, Kind kind, std::string_view rule, bool rename = true) {
    Element e;
    e.gid = rename ? src.gid + std::string(kResultSuffix) : src.gid;
    e.kind = kind;
    e.owner = src.owner;
    e.is_citation = src.is_citation;
    e.cited_element = src.cited_element;
    e.is_abstract = src.is_abstract;
    e.abstract_form = src.abstract_form;
    e.name = src.name;
    e.description = src.description;
    e.implementation_constraints = src.implementation_constraints;
    e.notes = src.notes;
    e.tagged_values = src.tagged_values;
    e.content = src.content;
    e.meta_claims = src.meta_claims;
    if (is_a(kind, Kind::Assertion)) e.declaration = src.declaration;
    map(src.gid, e.gid, rule);
    return e;
  }

  void map(const Gid& source, const Gid& result, std::string_view rule) {
    primary_.emplace(source, result);
    trace_.push_back(TraceLink{source, result, std::string(rule)});
  }

  void emit(Element e) { out_.push_back(std::move(e)); }

  void warn(Diagnostic d) { warnings_.push_back(std::move(d)); }

  TransformResult finish() {
    TransformResult result;
    for (auto& e : out_) {
      for_each_reference(e, [&](RefField field, Gid& gid) {
        if (field == RefField::abstract_form) return;
        if (auto it = primary_.find(gid); it != primary_.end()) gid = it->second;
      });
      result.model.add(std::move(e));
    }
    result.trace = std::move(trace_);
    sort_diagnostics(warnings_);
    result.warnings = std::move(warnings_);
    return result;
  }

 private:
  std::vector<Element> out_;
  std::map<Gid, Gid> primary_;
  std::vector<TraceLink> trace_;
  std::vector<Diagnostic> warnings_;
};

Element relationship(Builder& b, const Element& src, Kind kind, std::string_view rule,
                     std::vector<Gid> sources, std::vector<Gid> targets) {
  Element e = b.carry(src, kind, rule);
  e.sources = std::move(sources);
  e.targets = std::move(targets);
  e.is_counter = src.is_counter;
  e.reasoning = src.reasoning;
  e.many = src.many;
  e.is_optional = src.is_optional;
  e.choice = src.choice;
  return e;
}

bool artifact_like(Kind k) { return is_a(k, Kind::ArtifactReference); }

}  // namespace

TransformResult gsn_to_sacm(const Model& gsn) {
  require_valid(gsn, Notation::gsn);

  std::map<Gid, std::vector<const Element*>> into_strategy;
  std::map<Gid, std::vector<const Element*>> out_of_strategy;
  for (const auto& e : gsn.elements()) {
    if (e.kind != Kind::SupportedBy) continue;
    const Element& from = gsn.at(e.sources.front());
    const Element& to = gsn.at(e.targets.front());
    if (to.kind == Kind::Strategy) into_strategy[to.gid].push_back(&e);
    if (from.kind == Kind::Strategy) out_of_strategy[from.gid].push_back(&e);
  }
  for (const auto& e : gsn.elements()) {
    if (e.kind != Kind::Strategy) continue;
    const auto& in = into_strategy[e.gid];
    if (in.empty()) {
      throw Error(ErrorCode::StrategyDangling,
                  "Strategy '" + e.gid + "' is not the target of any SupportedBy", {e.gid});
    }
    if (in.size() > 1) {
      throw Error(ErrorCode::AmbiguousReasoning,
                  "Strategy '" + e.gid + "' is supported by " + std::to_string(in.size()) +
                      " connectors",
                  {e.gid});
    }
  }

  Builder b;
  for (const auto& src : gsn.elements()) {
    switch (src.kind) {
      case Kind::GsnModule:
        b.emit(b.carry(src, Kind::ArgumentPackage, "Module2ArgumentPackage"));
        break;
      case Kind::ContractModule: {
        Element e = b.carry(src, Kind::ArgumentPackageBinding, "ContractModule2ArgumentPackageBinding");
        e.participant_packages = src.participant_packages;
        b.emit(std::move(e));
        break;
      }
      case Kind::Goal: {
        Element e = b.carry(src, Kind::Claim, "Goal2Claim");
        if (src.undeveloped) e.declaration = Declaration::needsSupport;
        if (src.to_be_supported_by_contract) set_tag(e, "toBeSupportedByContract", "true");
        if (src.is_public) set_tag(e, "public", "true");
        b.emit(std::move(e));
        break;
      }
      case Kind::Assumption: {
        Element e = b.carry(src, Kind::Claim, "Assumption2Claim");
        e.declaration = src.is_citation ? Declaration::asCited : Declaration::assumed;
        b.emit(std::move(e));
        break;
      }
      case Kind::Justification: {
        Element e = b.carry(src, Kind::Claim, "Justification2Claim");
        e.declaration = src.is_citation ? Declaration::asCited : Declaration::axiomatic;
        b.emit(std::move(e));
        break;
      }
      case Kind::AwayGoal: {
        Element e = b.carry(src, Kind::Claim, "AwayGoal2Claim");
        e.declaration = Declaration::asCited;
        e.is_citation = true;
        if (!src.module_ref.empty()) set_tag(e, "module", src.module_ref);
        b.emit(std::move(e));
        break;
      }
      case Kind::Solution:
      case Kind::AwaySolution:
      case Kind::AwayContext:
      case Kind::ModuleReference:
      case Kind::ContractModuleReference: {
        Element e = b.carry(src, Kind::ArtifactReference,
                            std::string(to_string(src.kind)) + "2ArtifactReference");
        e.referenced_artifact = src.referenced_artifact.empty() ? src.module_ref : src.referenced_artifact;
        if (!src.statement.empty() && e.description.empty()) e.description = MultiLangString("en", src.statement);
        b.emit(std::move(e));
        break;
      }
      case Kind::Context: {
        const bool artifact = !src.referenced_artifact.empty();
        Element e = b.carry(src, artifact ? Kind::ArtifactReference : Kind::Claim,
                            artifact ? "Context2ArtifactReference" : "Context2Claim");
        if (artifact) {
          e.referenced_artifact = src.referenced_artifact;
        } else {
          e.declaration = Declaration::axiomatic;
        }
        if (!src.statement.empty()) e.description.set(LangString{"en", src.statement, {}});
        b.emit(std::move(e));
        break;
      }
      case Kind::Strategy: {
        b.emit(b.carry(src, Kind::ArgumentReasoning, "Strategy2ArgumentReasoning"));
        const auto& outgoing = out_of_strategy[src.gid];
        const Element* incoming = into_strategy[src.gid].front();
        if (outgoing.empty()) {
          b.map(incoming->gid, src.gid + std::string(kResultSuffix), "SupportedBy2ArgumentReasoning");
          b.warn(make_diagnostic("TRANS-W1", {src.gid},
                                 "Strategy '" + src.gid + "' supports no goal; only its reasoning is kept"));
          break;
        }
        Element inf;
        inf.gid = src.gid + std::string(kInferenceSuffix);
        inf.kind = Kind::AssertedInference;
        inf.owner = src.owner;
        inf.is_abstract = src.is_abstract;
        inf.reasoning = src.gid;
        inf.targets = {incoming->sources.front()};
        for (const Element* c : outgoing) {
          inf.sources.push_back(c->targets.front());
        }
        if (outgoing.size() == 1) {
          inf.many = outgoing.front()->many;
          inf.is_optional = outgoing.front()->is_optional;
          inf.choice = outgoing.front()->choice;
        }
        b.map(incoming->gid, inf.gid, "SupportedBy2MergedInference");
        for (const Element* c : outgoing) b.map(c->gid, inf.gid, "SupportedBy2MergedInference");
        b.emit(std::move(inf));
        break;
      }
      case Kind::SupportedBy: {
        const Element& from = gsn.at(src.sources.front());
        const Element& to = gsn.at(src.targets.front());
        if (from.kind == Kind::Strategy || to.kind == Kind::Strategy) break;  // merged above
        if (artifact_like(to.kind)) {
          b.emit(relationship(b, src, Kind::AssertedEvidence, "SupportedBy2AssertedEvidence", {to.gid},
                              {from.gid}));
        } else {
          b.emit(relationship(b, src, Kind::AssertedInference, "SupportedBy2AssertedInference",
                              {to.gid}, {from.gid}));
        }
        break;
      }
      case Kind::InContextOf:
        b.emit(relationship(b, src, Kind::AssertedContext, "InContextOf2AssertedContext",
                            {src.targets.front()}, {src.sources.front()}));
        break;
      default:
        b.map(src.gid, src.gid, "Copy");
        b.emit(src);
        break;
    }
  }
  return b.finish();
}

TransformResult cae_to_sacm(const Model& cae) {
  require_valid(cae, Notation::cae);

  // Argument -> the claim its single Supports edge points at.
  std::map<Gid, const Element*> supports_of;
  std::map<Gid, std::vector<Gid>> arguments_for;  // parent claim -> Arguments
  for (const auto& e : cae.elements()) {
    if (e.kind != Kind::Supports) continue;
    const Gid& arg = e.sources.front();
    if (supports_of.contains(arg)) {
      throw Error(ErrorCode::AmbiguousReasoning, "Argument '" + arg + "' has more than one Supports edge",
                  {arg});
    }
    supports_of[arg] = &e;
    arguments_for[e.targets.front()].push_back(arg);
  }
  for (const auto& e : cae.elements()) {
    if (e.kind == Kind::Argument && !supports_of.contains(e.gid)) {
      throw Error(ErrorCode::ArgumentDangling, "Argument '" + e.gid + "' has no Supports edge", {e.gid});
    }
  }

  auto absorbing_argument = [&](const Element& sub) -> Gid {
    const Gid& parent = sub.targets.front();
    if (!sub.reasoning.empty()) {
      auto it = supports_of.find(sub.reasoning);
      if (it != supports_of.end() && it->second->targets.front() == parent) return sub.reasoning;
      return {};
    }
    auto it = arguments_for.find(parent);
    if (it != arguments_for.end() && it->second.size() == 1) return it->second.front();
    return {};
  };
  std::map<Gid, std::vector<const Element*>> absorbed;
  for (const auto& e : cae.elements()) {
    if (e.kind != Kind::IsSubClaimOf) continue;
    if (Gid arg = absorbing_argument(e); !arg.empty()) absorbed[arg].push_back(&e);
  }

  Builder b;
  for (const auto& src : cae.elements()) {
    switch (src.kind) {
      case Kind::CaeModule:
        b.emit(b.carry(src, Kind::ArgumentPackage, "CAEModule2ArgumentPackage"));
        break;
      case Kind::CaeModuleInterface:
        b.emit(b.carry(src, Kind::ArgumentPackageInterface, "CAEModuleInterface2ArgumentPackageInterface"));
        break;
      case Kind::CaeModuleBinding: {
        Element e = b.carry(src, Kind::ArgumentPackageBinding, "CAEModuleBinding2ArgumentPackageBinding");
        e.participant_packages = src.participant_packages;
        b.emit(std::move(e));
        break;
      }
      case Kind::CaeClaim:
        b.emit(b.carry(src, Kind::Claim, "CAEClaim2Claim"));
        break;
      case Kind::CaeAssumption: {
        Element e = b.carry(src, Kind::Claim, "CaeAssumption2Claim");
        if (!src.is_citation) e.declaration = Declaration::assumed;
        b.emit(std::move(e));
        break;
      }
      case Kind::Evidence: {
        Element e = b.carry(src, Kind::ArtifactReference, "Evidence2ArtifactReference");
        e.referenced_artifact = src.referenced_artifact;
        b.emit(std::move(e));
        break;
      }
      case Kind::Argument: {
        b.emit(b.carry(src, Kind::ArgumentReasoning, "Argument2ArgumentReasoning"));
        const Element* supports = supports_of.at(src.gid);
        const auto& subs = absorbed[src.gid];
        if (subs.empty()) {
          b.map(supports->gid, src.gid + std::string(kResultSuffix), "Supports2ArgumentReasoning");
          b.warn(make_diagnostic("TRANS-W1", {src.gid},
                                 "Argument '" + src.gid + "' has no sub-claims; only its reasoning is kept"));
          break;
        }
        Element inf;
        inf.gid = src.gid + std::string(kInferenceSuffix);
        inf.kind = Kind::AssertedInference;
        inf.owner = src.owner;
        inf.is_abstract = src.is_abstract;
        inf.reasoning = src.gid;
        inf.targets = supports->targets;
        inf.is_counter = supports->is_counter;
        for (const Element* s : subs) inf.sources.push_back(s->sources.front());
        if (subs.size() == 1) {
          inf.many = subs.front()->many;
          inf.is_optional = subs.front()->is_optional;
          inf.choice = subs.front()->choice;
        }
        b.map(supports->gid, inf.gid, "Supports2MergedInference");
        for (const Element* s : subs) b.map(s->gid, inf.gid, "IsSubClaimOf2MergedInference");
        b.emit(std::move(inf));
        break;
      }
      case Kind::Supports:
        break;  // folded into its Argument
      case Kind::IsSubClaimOf: {
        if (!absorbing_argument(src).empty()) break;
        b.emit(relationship(b, src, Kind::AssertedInference, "IsSubClaimOf2AssertedInference", src.sources,
                            src.targets));
        break;
      }
      case Kind::IsEvidenceFor:
        b.emit(relationship(b, src, Kind::AssertedEvidence, "IsEvidenceFor2AssertedEvidence", src.sources,
                            src.targets));
        break;
      default:
        b.map(src.gid, src.gid, "Copy");
        b.emit(src);
        break;
    }
  }
  return b.finish();
}

std::vector<Gid> trace_lookup(std::span<const TraceLink> links, std::string_view source_gid) {
  std::vector<Gid> out;
  for (const auto& l : links) {
    if (l.source_gid == source_gid && std::ranges::find(out, l.result_gid) == out.end()) {
      out.push_back(l.result_gid);
    }
  }
  return out;
}

}  // namespace acm
