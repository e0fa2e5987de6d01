#include "fixtures.hpp"

#include <array>
#include <stdexcept>

#include "acm/argumentation.hpp"
#include "acm/artifact.hpp"
#include "acm/cae.hpp"
#include "acm/gsn.hpp"
#include "acm/terminology.hpp"

#ifndef ACM_FIXTURE_DIR
#error "ACM_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace acm::fixtures {

namespace {

// Raw element constructors. Violation fixtures need states the checked
// builders refuse to create, so everything here bypasses them.
Element node(Kind kind, Gid gid, Gid owner, std::string name = {}, std::string text = {}) {
  Element e;
  e.kind = kind;
  e.gid = std::move(gid);
  e.owner = std::move(owner);
  if (!name.empty()) e.name = LangString{"en", std::move(name), {}};
  if (!text.empty()) e.description = MultiLangString("en", text);
  return e;
}

Element link(Kind kind, Gid gid, Gid owner, std::vector<Gid> sources, std::vector<Gid> targets) {
  Element e = node(kind, std::move(gid), std::move(owner));
  e.sources = std::move(sources);
  e.targets = std::move(targets);
  return e;
}

Element claim(Gid gid, Gid owner, std::string text, Declaration d = Declaration::asserted) {
  std::string name = gid.substr(gid.rfind('.') + 1);
  Element e = node(Kind::Claim, std::move(gid), std::move(owner), std::move(name), std::move(text));
  e.declaration = d;
  return e;
}

Element citation(Gid gid, Gid owner, Gid cited) {
  Element e = claim(std::move(gid), std::move(owner), {}, Declaration::asCited);
  e.is_citation = true;
  e.cited_element = std::move(cited);
  return e;
}

// set_external_resource would mint a random gid; fixtures must be stable.
void uri(Model& m, const Gid& asset, std::string location) {
  m.add(node(Kind::Property, asset + ".uri", asset, std::string(kUriProperty), std::move(location)));
}

Model sacm_with_package(Kind kind = Kind::ArgumentPackage, Gid gid = "AP") {
  Model m(Notation::sacm);
  m.add(node(kind, std::move(gid), {}, "Argument"));
  return m;
}

// ---- violation fixtures: each trips exactly one rule -------------------

Model gsn_base() {
  Model m(Notation::gsn);
  m.add(node(Kind::GsnModule, "M", {}, "Module"));
  m.add(node(Kind::Goal, "G1", "M", "G1", "The system is acceptably safe"));
  m.add(node(Kind::Strategy, "S1", "M", "S1", "Argument over identified hazards"));
  m.add(node(Kind::Goal, "G2", "M", "G2", "Hazard H1 is mitigated"));
  m.add(node(Kind::Solution, "Sn1", "M", "Sn1", "Fault tree analysis"));
  m.add(link(Kind::SupportedBy, "SB1", "M", {"G1"}, {"S1"}));
  return m;
}

Model v_gsn_e1() {
  Model m = gsn_base();
  m.add(link(Kind::SupportedBy, "SB2", "M", {"S1"}, {"G2"}));
  m.add(link(Kind::SupportedBy, "SB3", "M", {"G2"}, {"Sn1"}));
  // A strategy supported directly by a solution.
  m.add(link(Kind::SupportedBy, "SB4", "M", {"S1"}, {"Sn1"}));
  return m;
}

Model v_gsn_e2() {
  Model m = gsn_base();
  m.add(link(Kind::SupportedBy, "SB2", "M", {"S1"}, {"G2"}));
  m.add(link(Kind::SupportedBy, "SB3", "M", {"G2"}, {"Sn1"}));
  m.add(node(Kind::Goal, "G3", "M", "G3", "Hazard H2 is mitigated"));
  m.at("G3").undeveloped = true;
  m.add(link(Kind::InContextOf, "IC1", "M", {"G1"}, {"G3"}));
  return m;
}

Model v_gsn_e3() {
  Model m = gsn_base();
  m.add(link(Kind::SupportedBy, "SB2", "M", {"S1"}, {"G2"}));
  m.add(link(Kind::SupportedBy, "SB3", "M", {"G2"}, {"Sn1"}));
  m.at("G2").undeveloped = true;
  return m;
}

Model v_sacm_e1() {
  Model m = sacm_with_package();
  m.add(claim("C1", "AP", "The system is acceptably safe"));
  m.add(claim("C2", "AP", "All hazards are mitigated"));
  m.add(link(Kind::AssertedEvidence, "R1", "AP", {"C2"}, {"C1"}));
  return m;
}

Model v_sacm_e2() {
  Model m = sacm_with_package();
  m.add(claim("C1", "AP", "The system is acceptably safe"));
  m.add(link(Kind::AssertedInference, "R1", "AP", {"C9"}, {"C1"}));
  return m;
}

Model v_sacm_w3() {
  Model m = sacm_with_package();
  Element c = claim("C1", "AP", {}, Declaration::asCited);
  c.is_citation = true;
  m.add(c);
  return m;
}

Model v_sacm_w4() {
  Model m = sacm_with_package();
  m.add(citation("C1", "AP", "C2"));
  m.add(citation("C2", "AP", "C1"));
  return m;
}

Model v_sacm_w5() {
  Model m = sacm_with_package();
  m.add(claim("C1", "AP", "Component A is safe"));
  m.add(claim("C2", "AP", "Component B is safe"));
  m.add(link(Kind::AssertedInference, "R1", "AP", {"C1"}, {"C2"}));
  m.add(link(Kind::AssertedInference, "R2", "AP", {"C2"}, {"C1"}));
  return m;
}

Model v_sacm_w6() {
  Model m = sacm_with_package();
  m.add(claim("C1", "AP", "Braking is safe"));
  m.add(claim("C2", "AP", "Steering is safe"));
  m.add(claim("C3", "AP", "The controller is verified"));
  m.add(link(Kind::AssertedInference, "R1", "AP", {"C3"}, {"C1", "C2"}));
  return m;
}

Model v_sacm_w7() {
  Model m = sacm_with_package(Kind::ArtifactPackage, "ARP");
  m.add(node(Kind::Artifact, "A1", "ARP", "Hazard log"));
  m.add(link(Kind::ArtifactAssetRelationship, "AR1", "ARP", {"A1"}, {"A1"}));
  return m;
}

Model v_sacm_w8() {
  Model m(Notation::sacm);
  m.add(node(Kind::ArtifactPackage, "ARP", {}, "Artifacts"));
  m.add(node(Kind::Artifact, "A1", "ARP", "Glossary"));
  m.add(node(Kind::TerminologyPackage, "TP", {}, "Terminology"));
  Element t = node(Kind::Term, "T1", "TP");
  t.value = "Hazard";
  t.external_reference = "https://example.org/glossary#hazard";
  t.origin = "A1";
  m.add(t);
  return m;
}

Model v_sacm_w9() {
  Model m = sacm_with_package();
  Element c = claim("C1", "AP", {});
  c.description = MultiLangString({LangString{"en", "Train is safe", "X9"}});
  m.add(c);
  return m;
}

Model v_sacm_w10() {
  Model m = sacm_with_package();
  m.add(claim("C1", "AP", "The brake model is valid", Declaration::defeated));
  return m;
}

Model v_sacm_w11() {
  Model m = sacm_with_package();
  m.add(claim("C1", "AP", "The system is acceptably safe"));
  m.add(node(Kind::ArgumentPackageInterface, "API", {}, "Interface"));
  m.add(claim("C2", "API", "Exported without citing"));
  return m;
}

Model v_sacm_w12() {
  Model m = sacm_with_package();
  m.add(node(Kind::ArgumentPackageBinding, "APB", {}, "Binding"));
  m.at("APB").participant_packages = {"AP"};
  return m;
}

}  // namespace

// ---- well-formed figure reconstructions --------------------------------

Model inference() {
  Model m = sacm_with_package();
  add_claim(m, "AP", "C1", "The system is acceptably safe", Declaration::asserted, "C1");
  add_claim(m, "AP", "C2", "All identified hazards are mitigated", Declaration::asserted, "C2");
  const std::array<Gid, 1> src{"C2"}, tgt{"C1"};
  add_relationship(m, "AP", Kind::AssertedInference, src, tgt, false, "R1");
  return m;
}

Model context() {
  Model m = sacm_with_package();
  add_claim(m, "AP", "C1", "The system is acceptably safe", Declaration::asserted, "C1");
  add_claim(m, "AP", "A1", "The operating environment is as specified", Declaration::assumed, "A1");
  const std::array<Gid, 1> src{"A1"}, tgt{"C1"};
  add_relationship(m, "AP", Kind::AssertedContext, src, tgt, false, "R1");
  return m;
}

Model evidence() {
  Model m(Notation::sacm);
  add_package(m, Kind::ArtifactPackage, {}, "Artifacts", "ARP");
  add_asset(m, "ARP", Kind::Artifact, "System test report", "A1");
  uri(m, "A1", "reports/system-test.pdf");
  add_package(m, Kind::ArgumentPackage, {}, "Argument", "AP");
  add_claim(m, "AP", "C1", "The system meets its requirements", Declaration::asserted, "C1");
  add_artifact_reference(m, "AP", "S1", "A1", "S1");
  const std::array<Gid, 1> src{"S1"}, tgt{"C1"};
  add_relationship(m, "AP", Kind::AssertedEvidence, src, tgt, false, "R1");
  return m;
}

Model artifact_support() {
  Model m(Notation::sacm);
  add_package(m, Kind::ArtifactPackage, {}, "Artifacts", "ARP");
  add_asset(m, "ARP", Kind::Artifact, "System test report", "A1");
  add_asset(m, "ARP", Kind::Artifact, "System test plan", "A2");
  add_package(m, Kind::ArgumentPackage, {}, "Argument", "AP");
  add_artifact_reference(m, "AP", "S1", "A1", "S1");
  add_artifact_reference(m, "AP", "S2", "A2", "S2");
  const std::array<Gid, 1> src{"S2"}, tgt{"S1"};
  add_relationship(m, "AP", Kind::AssertedArtifactSupport, src, tgt, false, "R1");
  return m;
}

Model reasoning() {
  Model m = inference();
  add_reasoning(m, "AP", "S1", "Argument over all identified hazards", "S1");
  attach_reasoning(m, "R1", "S1");
  return m;
}

Model multilingual() {
  Model out(Notation::sacm);
  out.add(node(Kind::AssuranceCasePackage, "ACP", {}, "Case"));
  add_package(out, Kind::ArgumentPackage, "ACP", "Argument", "AP");
  add_claim(out, "AP", "C1", "All hazards are identified", Declaration::asserted, "C1");
  out.at("C1").description.add(LangString{"de", "Alle Gefährdungen sind identifiziert", {}});
  out.at("C1").notes.push_back(MultiLangString({LangString{"ocl", "self.hazards->notEmpty()", {}}}));
  out.at("C1").tagged_values.push_back(TaggedValue{"sil", MultiLangString("en", "4")});
  return out;
}

// ---- reference structures ----------------------------------------------

Model r1() {
  Model m(Notation::gsn);
  add_package(m, Kind::GsnModule, {}, "R1", "M");
  const std::array<NodeSpec, 7> nodes{{
      {.kind = Kind::Goal, .gid = "G1", .name = "G1", .text = "The control system is acceptably safe"},
      {.kind = Kind::Strategy, .gid = "S1", .name = "S1", .text = "Argument over each identified hazard"},
      {.kind = Kind::Goal, .gid = "G2", .name = "G2", .text = "Hazard H1 is sufficiently mitigated"},
      {.kind = Kind::Goal, .gid = "G3", .name = "G3", .text = "Hazard H2 is sufficiently mitigated"},
      {.kind = Kind::Solution, .gid = "Sn1", .name = "Sn1", .text = "Fault tree analysis for H1"},
      {.kind = Kind::Solution, .gid = "Sn2", .name = "Sn2", .text = "Test results for H2"},
      {.kind = Kind::Context, .gid = "C1", .name = "C1", .text = "Hazards identified in the hazard log"},
  }};
  const std::array<ConnectorSpec, 6> connectors{{
      {.kind = Kind::SupportedBy, .source = "G1", .target = "S1", .gid = "SB1"},
      {.kind = Kind::SupportedBy, .source = "S1", .target = "G2", .gid = "SB2"},
      {.kind = Kind::SupportedBy, .source = "S1", .target = "G3", .gid = "SB3"},
      {.kind = Kind::SupportedBy, .source = "G2", .target = "Sn1", .gid = "SB4"},
      {.kind = Kind::SupportedBy, .source = "G3", .target = "Sn2", .gid = "SB5"},
      {.kind = Kind::InContextOf, .source = "G1", .target = "C1", .gid = "IC1"},
  }};
  build_goal_structure(m, "M", nodes, connectors);
  return m;
}

Model r2() {
  Model m(Notation::cae);
  add_package(m, Kind::CaeModule, {}, "R2", "M");
  const std::array<NodeSpec, 7> nodes{{
      {.kind = Kind::CaeClaim, .gid = "C1", .name = "C1", .text = "The pump controller is safe"},
      {.kind = Kind::Argument, .gid = "A1", .name = "A1", .text = "Decomposition over failure modes"},
      {.kind = Kind::CaeClaim, .gid = "C2", .name = "C2", .text = "Overpressure is prevented"},
      {.kind = Kind::CaeClaim, .gid = "C3", .name = "C3", .text = "Dry running is detected"},
      {.kind = Kind::CaeAssumption, .gid = "CA1", .name = "CA1", .text = "The pressure sensor is calibrated"},
      {.kind = Kind::Evidence, .gid = "E1", .name = "E1", .text = "Relief valve test report"},
      {.kind = Kind::Evidence, .gid = "E2", .name = "E2", .text = "Dry running detection tests"},
  }};
  const std::array<ConnectorSpec, 6> connectors{{
      {.kind = Kind::Supports, .source = "A1", .target = "C1", .gid = "SP1"},
      {.kind = Kind::IsSubClaimOf, .source = "C2", .target = "C1", .gid = "SC1"},
      {.kind = Kind::IsSubClaimOf, .source = "C3", .target = "C1", .gid = "SC2"},
      {.kind = Kind::IsSubClaimOf, .source = "CA1", .target = "C3", .gid = "SC3"},
      {.kind = Kind::IsEvidenceFor, .source = "E1", .target = "C2", .gid = "EF1"},
      {.kind = Kind::IsEvidenceFor, .source = "E2", .target = "C3", .gid = "EF2"},
  }};
  build_cae_structure(m, "M", nodes, connectors);
  return m;
}

Model declarations_gsn() {
  Model m(Notation::gsn);
  add_package(m, Kind::GsnModule, {}, "Vehicle", "M1");
  add_package(m, Kind::GsnModule, {}, "Braking", "M2");
  const std::array<NodeSpec, 9> nodes{{
      {.kind = Kind::Goal, .gid = "G1", .name = "G1", .text = "The vehicle is acceptably safe"},
      {.kind = Kind::Goal, .gid = "G2", .name = "G2", .text = "Steering hazards are mitigated", .undeveloped = true},
      {.kind = Kind::Assumption, .gid = "A1", .name = "A1", .text = "Drivers hold a valid licence"},
      {.kind = Kind::Justification, .gid = "J1", .name = "J1", .text = "Compliance with ISO 26262 is accepted"},
      {.kind = Kind::Context, .gid = "C1", .name = "C1", .text = "Operated on public roads"},
      {.kind = Kind::AwayGoal, .gid = "AG1", .name = "G9", .text = "Braking is acceptably safe", .cited = "G9",
       .module_ref = "M2"},
      {.kind = Kind::Goal, .gid = "G9", .name = "G9", .text = "Braking is acceptably safe", .owner = "M2"},
      {.kind = Kind::Solution, .gid = "Sn9", .name = "Sn9", .text = "Brake test results", .owner = "M2"},
      {.kind = Kind::Goal, .gid = "G3", .name = "G3", .text = "Stability control is correct"},
  }};
  const std::array<ConnectorSpec, 8> connectors{{
      {.kind = Kind::SupportedBy, .source = "G1", .target = "G2", .gid = "SB1"},
      {.kind = Kind::SupportedBy, .source = "G1", .target = "AG1", .gid = "SB2"},
      {.kind = Kind::SupportedBy, .source = "G1", .target = "G3", .gid = "SB3"},
      {.kind = Kind::InContextOf, .source = "G1", .target = "A1", .gid = "IC1"},
      {.kind = Kind::InContextOf, .source = "G1", .target = "J1", .gid = "IC2"},
      {.kind = Kind::InContextOf, .source = "G1", .target = "C1", .gid = "IC3"},
      {.kind = Kind::SupportedBy, .source = "G9", .target = "Sn9", .gid = "SB9"},
      {.kind = Kind::SupportedBy, .source = "G3", .target = "Sn9", .gid = "SB4"},
  }};
  build_goal_structure(m, "M1", nodes, connectors);
  m.at("G9").is_public = true;
  return m;
}

Model declarations_sacm() {
  Model m(Notation::sacm);
  add_package(m, Kind::ArgumentPackage, {}, "Vehicle", "AP");
  add_package(m, Kind::ArgumentPackage, {}, "Braking", "BP");
  add_package(m, Kind::ArgumentPackageInterface, {}, "Braking interface", "BPI");
  add_claim(m, "BP", "G9", "Braking is acceptably safe", Declaration::asserted, "G9");
  add_claim(m, "BP", "G9a", "Brake tests passed", Declaration::axiomatic, "G9a");
  m.add(citation("BPI.G9", "BPI", "G9"));
  m.add(citation("G4", "AP", "BPI.G9"));

  add_claim(m, "AP", "G1", "The vehicle is acceptably safe", Declaration::asserted, "G1");
  add_claim(m, "AP", "G2", "Steering hazards are mitigated", Declaration::needsSupport, "G2");
  add_claim(m, "AP", "A1", "Drivers hold a valid licence", Declaration::assumed, "A1");
  add_claim(m, "AP", "J1", "Compliance with ISO 26262 is accepted", Declaration::axiomatic, "J1");
  add_claim(m, "AP", "D1", "The legacy brake model is valid", Declaration::defeated, "D1");
  add_claim(m, "AP", "X1", "The legacy model ignores wet rail", Declaration::axiomatic, "X1");
  add_claim(m, "AP", "M1", "The hazard analysis was independently reviewed", Declaration::assumed, "M1");

  const auto rel = [&m](Kind kind, Gid gid, std::vector<Gid> s, std::vector<Gid> t, bool counter = false) {
    add_relationship(m, gid.starts_with("B") ? "BP" : "AP", kind, s, t, counter, gid);
  };
  rel(Kind::AssertedInference, "R1", {"G2", "G4", "J1"}, {"G1"});
  rel(Kind::AssertedContext, "R2", {"A1"}, {"G1"});
  rel(Kind::AssertedInference, "R3", {"X1"}, {"D1"}, true);
  rel(Kind::AssertedInference, "B1", {"G9a"}, {"G9"});
  attach_meta_claim(m, "R1", "M1");
  m.at("R2").declaration = Declaration::assumed;
  return m;
}

Model evaluation_tree() {
  Model m(Notation::sacm);
  add_package(m, Kind::ArtifactPackage, {}, "Evidence", "ARP");
  add_package(m, Kind::ArgumentPackage, {}, "Argument", "AP");
  for (int i = 1; i <= 5; ++i) {
    const std::string n = std::to_string(i);
    add_asset(m, "ARP", Kind::Artifact, "Report " + n, "D" + n);
    add_artifact_reference(m, "AP", "E" + n, "D" + n, "E" + n);
  }
  add_claim(m, "AP", "C1", "The interlocking is safe", Declaration::asserted, "C1");
  add_claim(m, "AP", "C2", "Route setting is correct", Declaration::asserted, "C2");
  add_claim(m, "AP", "C3", "Points are detected", Declaration::asserted, "C3");
  add_claim(m, "AP", "C4", "Route conflicts are rejected", Declaration::asserted, "C4");
  add_claim(m, "AP", "C5", "Flank protection holds", Declaration::asserted, "C5");
  add_claim(m, "AP", "A1", "Signals are maintained", Declaration::assumed, "A1");
  add_claim(m, "AP", "J1", "Data preparation follows EN 50128", Declaration::axiomatic, "J1");
  add_claim(m, "AP", "C6", "Level crossings are covered", Declaration::needsSupport, "C6");
  add_claim(m, "AP", "C7", "The crossing controller is safe", Declaration::asserted, "C7");
  add_claim(m, "AP", "C9", "Route data is complete", Declaration::asserted, "C9");
  m.add(citation("C8", "AP", "C4"));

  const auto rel = [&m](Kind kind, Gid gid, std::vector<Gid> s, std::vector<Gid> t) {
    add_relationship(m, "AP", kind, s, t, false, gid);
  };
  rel(Kind::AssertedInference, "I1", {"C2", "C3", "A1"}, {"C1"});
  rel(Kind::AssertedInference, "I2", {"C4", "C5", "J1"}, {"C2"});
  rel(Kind::AssertedEvidence, "V1", {"E1", "E2"}, {"C4"});
  rel(Kind::AssertedEvidence, "V2", {"E3"}, {"C5"});
  rel(Kind::AssertedEvidence, "V3", {"E4"}, {"C3"});
  rel(Kind::AssertedEvidence, "V4", {"E5"}, {"C3"});
  rel(Kind::AssertedInference, "I3", {"C6"}, {"C7"});
  rel(Kind::AssertedInference, "I4", {"C8"}, {"C9"});
  return m;
}

Model etcs() {
  Model m(Notation::sacm);
  // Component cases.
  struct Side {
    const char* acp;
    const char* acp_name;
    const char* ap;
    const char* api;
    const char* arp;
    const char* goal;
    const char* goal_text;
  };
  const std::array<Side, 2> sides{{
      {"OB", "On-Board ACP", "AP1", "API1", "ARP1", "G2", "The on-board subsystem is acceptably safe"},
      {"TS", "Track-Side ACP", "AP2", "API2", "ARP2", "G3", "The track-side subsystem is acceptably safe"},
  }};
  int evidence = 0;
  for (const auto& s : sides) {
    const std::string ap = s.ap;
    add_package(m, Kind::AssuranceCasePackage, {}, s.acp_name, s.acp);
    add_package(m, Kind::ArgumentPackage, s.acp, ap, ap);
    add_package(m, Kind::ArgumentPackageInterface, s.acp, s.api, s.api);
    add_package(m, Kind::ArtifactPackage, s.acp, s.arp, s.arp);
    const Gid goal = ap + "." + s.goal;
    add_claim(m, ap, s.goal, s.goal_text, Declaration::asserted, goal);
    const int count = ap == "AP1" ? 2 : 1;
    std::vector<Gid> refs;
    for (int i = 0; i < count; ++i) {
      const std::string n = std::to_string(++evidence);
      add_asset(m, s.arp, Kind::Artifact, "Hazard analysis " + n, std::string(s.arp) + ".A" + n);
      add_artifact_reference(m, ap, "E" + n, std::string(s.arp) + ".A" + n, ap + ".E" + n);
      refs.push_back(ap + ".E" + n);
    }
    const std::array<Gid, 1> target{goal};
    add_relationship(m, ap, Kind::AssertedEvidence, refs, target, false, ap + ".R1");
    m.add(citation(std::string(s.api) + "." + s.goal, s.api, goal));
  }
  uri(m, "ARP1.A1", "evidence/onboard-fta.pdf");

  // Integration.
  add_package(m, Kind::AssuranceCasePackage, {}, "Integration ACP", "INT");
  add_package(m, Kind::AssuranceCasePackageBinding, "INT", "Integration ACPB", "ACPB");
  m.at("ACPB").participant_packages = {"OB", "TS"};
  add_package(m, Kind::ArgumentPackageBinding, "ACPB", "APB1", "APB1");
  m.at("APB1").participant_packages = {"API1", "API2"};
  add_claim(m, "APB1", "G1", "ETCS is acceptably safe", Declaration::asserted, "APB1.G1");
  m.add(citation("APB1.G2", "APB1", "API1.G2"));
  m.add(citation("APB1.G3", "APB1", "API2.G3"));
  add_reasoning(m, "APB1", "S1", "Argument over the on-board and track-side subsystems", "APB1.S1");
  const std::array<Gid, 2> parts{"APB1.G2", "APB1.G3"};
  const std::array<Gid, 1> top{"APB1.G1"};
  add_relationship(m, "APB1", Kind::AssertedInference, parts, top, false, "APB1.R1");
  attach_reasoning(m, "APB1.R1", "APB1.S1");
  return m;
}

Model etcs_gsn() {
  Model m(Notation::gsn);
  add_package(m, Kind::GsnModule, {}, "ETCS", "M");
  const std::array<NodeSpec, 7> nodes{{
      {.kind = Kind::Goal, .gid = "G1", .name = "G1", .text = "ETCS is acceptably safe"},
      {.kind = Kind::Strategy, .gid = "S1", .name = "S1",
       .text = "Argument over the on-board and track-side subsystems"},
      {.kind = Kind::Goal, .gid = "G2", .name = "G2", .text = "The on-board subsystem is acceptably safe"},
      {.kind = Kind::Goal, .gid = "G3", .name = "G3", .text = "The track-side subsystem is acceptably safe"},
      {.kind = Kind::Solution, .gid = "Sn1", .name = "Sn1", .text = "On-board hazard analysis"},
      {.kind = Kind::Solution, .gid = "Sn2", .name = "Sn2", .text = "Track-side hazard analysis"},
      {.kind = Kind::Context, .gid = "C1", .name = "C1", .text = "ETCS Level 2 operation"},
  }};
  const std::array<ConnectorSpec, 6> connectors{{
      {.kind = Kind::SupportedBy, .source = "G1", .target = "S1", .gid = "SB1"},
      {.kind = Kind::SupportedBy, .source = "S1", .target = "G2", .gid = "SB2"},
      {.kind = Kind::SupportedBy, .source = "S1", .target = "G3", .gid = "SB3"},
      {.kind = Kind::SupportedBy, .source = "G2", .target = "Sn1", .gid = "SB4"},
      {.kind = Kind::SupportedBy, .source = "G3", .target = "Sn2", .gid = "SB5"},
      {.kind = Kind::InContextOf, .source = "S1", .target = "C1", .gid = "IC1"},
  }};
  build_goal_structure(m, "M", nodes, connectors);
  return m;
}

Model safety_pattern() {
  Model m(Notation::sacm);
  add_package(m, Kind::TerminologyPackage, {}, "TP1", "TP1");
  define_term(m, "TP1", "System X", std::nullopt, std::nullopt, "T1");
  define_expression(m, "TP1", "{System X} is safe", {{"System X", "T1"}}, "EX1");
  m.at("T1").is_abstract = true;
  m.at("EX1").is_abstract = true;

  add_package(m, Kind::ArgumentPackage, {}, "AP1", "AP1");
  Element g1 = claim("G1", "AP1", {});
  g1.description = MultiLangString({LangString{"en", "{System X} is safe", "EX1"}});
  g1.is_abstract = true;
  m.add(g1);
  Element s1 = node(Kind::ArgumentReasoning, "S1", "AP1", "S1",
                    "Argument over each safety-related function of {System X}");
  s1.is_abstract = true;
  m.add(s1);
  Element g2 = claim("G2", "AP1", "{Function} is safe");
  g2.is_abstract = true;
  g2.implementation_constraints.push_back(MultiLangString("en", "One claim per safety-related function"));
  m.add(g2);
  Element i1 = link(Kind::AssertedInference, "I1", "AP1", {"G2"}, {"G1"});
  i1.reasoning = "S1";
  i1.many = ManyDecorator{"n = number of safety-related functions"};
  i1.is_abstract = true;
  m.add(i1);
  return m;
}

Model gsn_pattern() {
  Model m(Notation::gsn);
  add_package(m, Kind::GsnModule, {}, "Functional safety pattern", "P");
  const std::array<NodeSpec, 4> nodes{{
      {.kind = Kind::Goal, .gid = "G1", .name = "G1", .text = "{System X} is safe",
       .uninstantiated = true},
      {.kind = Kind::Strategy, .gid = "S1", .name = "S1",
       .text = "Argument over each safety-related function of {System X}", .uninstantiated = true},
      {.kind = Kind::Goal, .gid = "G2", .name = "G2", .text = "{Function} is safe",
       .undeveloped = true, .uninstantiated = true},
      {.kind = Kind::Context, .gid = "C1", .name = "C1", .text = "Safety-related functions of {System X}",
       .uninstantiated = true},
  }};
  const std::array<ConnectorSpec, 3> connectors{{
      {.kind = Kind::SupportedBy, .source = "G1", .target = "S1", .gid = "SB1"},
      {.kind = Kind::SupportedBy, .source = "S1", .target = "G2", .gid = "SB2",
       .many = ManyDecorator{"n = number of safety-related functions"}},
      {.kind = Kind::InContextOf, .source = "S1", .target = "C1", .gid = "IC1"},
  }};
  build_goal_structure(m, "P", nodes, connectors);
  return m;
}

std::vector<Fixture> all() {
  std::vector<Fixture> out;
  const auto v = [&out](std::string name, std::string rule, Model m) {
    out.push_back(Fixture{std::move(name), Category::violation, std::move(rule), std::move(m)});
  };
  v("violation_gsn_e1", "GSN-E1", v_gsn_e1());
  v("violation_gsn_e2", "GSN-E2", v_gsn_e2());
  v("violation_gsn_e3", "GSN-E3", v_gsn_e3());
  v("violation_sacm_e1", "SACM-E1", v_sacm_e1());
  v("violation_sacm_e2", "SACM-E2", v_sacm_e2());
  v("violation_sacm_w3", "SACM-W3", v_sacm_w3());
  v("violation_sacm_w4", "SACM-W4", v_sacm_w4());
  v("violation_sacm_w5", "SACM-W5", v_sacm_w5());
  v("violation_sacm_w6", "SACM-W6", v_sacm_w6());
  v("violation_sacm_w7", "SACM-W7", v_sacm_w7());
  v("violation_sacm_w8", "SACM-W8", v_sacm_w8());
  v("violation_sacm_w9", "SACM-W9", v_sacm_w9());
  v("violation_sacm_w10", "SACM-W10", v_sacm_w10());
  v("violation_sacm_w11", "SACM-W11", v_sacm_w11());
  v("violation_sacm_w12", "SACM-W12", v_sacm_w12());

  const auto w = [&out](std::string name, Model m) {
    out.push_back(Fixture{std::move(name), Category::well_formed, {}, std::move(m)});
  };
  w("inference", inference());
  w("context", context());
  w("evidence", evidence());
  w("artifact_support", artifact_support());
  w("reasoning", reasoning());

  const auto o = [&out](std::string name, Model m) {
    out.push_back(Fixture{std::move(name), Category::other, {}, std::move(m)});
  };
  o("r1_gsn", r1());
  o("r2_cae", r2());
  o("declarations_gsn", declarations_gsn());
  o("declarations_sacm", declarations_sacm());
  o("evaluation_tree", evaluation_tree());
  o("etcs", etcs());
  o("etcs_gsn", etcs_gsn());
  o("safety_pattern", safety_pattern());
  o("gsn_pattern", gsn_pattern());
  o("multilingual", multilingual());
  return out;
}

const Fixture& get(const std::string& name) {
  static const std::vector<Fixture> corpus = all();
  for (const auto& f : corpus) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("no fixture named " + name);
}

std::filesystem::path directory() { return ACM_FIXTURE_DIR; }

}  // namespace acm::fixtures
