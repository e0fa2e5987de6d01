#include <doctest.h>

#include <set>

#include "acm/io.hpp"
#include "acm/transform.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace acm;
using acm::testing::error_of;

namespace {

// Same elements under the same gids, document order aside.
bool isomorphic(const Model& a, const Model& b) {
  if (a.notation() != b.notation() || a.size() != b.size()) return false;
  for (const auto& e : a.elements()) {
    const Element* other = b.find(e.gid);
    if (other == nullptr || !(*other == e)) return false;
  }
  return true;
}

std::string envelope(const std::string& elements, const std::string& notation = "sacm") {
  return R"({"format_version": "1.0", "notation": ")" + notation + R"(", "elements": [)" + elements + "]}";
}

Error load_error(const std::string& text) {
  try {
    load(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("load succeeded: " << text);
  return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("minimal envelope") {
  const Model m = load(envelope(R"({"gid": "ACP", "kind": "AssuranceCasePackage"})"));
  REQUIRE(m.size() == 1);
  CHECK(m.at("ACP").kind == Kind::AssuranceCasePackage);
  CHECK(m.notation() == Notation::sacm);
  CHECK(load(envelope("")).empty());
}

TEST_CASE("dangling references") {
  const std::string text = envelope(R"({"gid": "AP", "kind": "ArgumentPackage"},
      {"gid": "C1", "kind": "Claim", "owner_gid": "AP", "is_citation": true, "cited_element": "G9",
       "declaration": "asCited"})");
  const Error e = load_error(text);
  CHECK(e.code() == ErrorCode::DanglingReference);
  CHECK(e.subjects() == std::vector<std::string>{"G9"});
  CHECK_NOTHROW(load(text, LoadOptions{.resolve_references = false}));
}

TEST_CASE("abstract_form and expression_ref may point elsewhere") {
  CHECK_NOTHROW(load(envelope(R"({"gid": "AP", "kind": "ArgumentPackage"},
      {"gid": "C1", "kind": "Claim", "owner_gid": "AP", "abstract_form": "G1",
       "description": [{"lang": "en", "content": "x", "expression_ref": "EX9"}]})")));
}

TEST_CASE("ETCS file") {
  const Model m = load_file(fixtures::directory() / "etcs.acm.json");
  int cases = 0, interfaces = 0;
  for (const auto& e : m.elements()) {
    cases += e.kind == Kind::AssuranceCasePackage;
    interfaces += is_interface(e.kind);
  }
  CHECK(cases == 3);
  CHECK(interfaces == 2);
  CHECK(m.at("ACPB").participant_packages == std::vector<Gid>{"OB", "TS"});
}

TEST_CASE("schema errors carry a JSON path") {
  struct Case {
    std::string text;
    std::string path;
  };
  const std::vector<Case> cases{
      {envelope(R"({"gid": "AP", "kind": "ArgumentPackage", "colour": "red"})"), "/elements/0/colour"},
      {envelope(R"({"gid": "AP", "kind": "Widget"})"), "/elements/0/kind"},
      {envelope(R"({"gid": "AP", "kind": "ArgumentPackage"}, {"gid": "G1", "kind": "Goal", "owner_gid": "AP"})"),
       "/elements/1/kind"},
      {envelope(R"({"gid": "AP", "kind": "ArgumentPackage"}, {"gid": "AP", "kind": "ArgumentPackage"})"),
       "/elements/1/gid"},
      {R"({"format_version": "9.9", "notation": "sacm", "elements": []})", "/format_version"},
      {R"({"format_version": "1.0", "notation": "uml", "elements": []})", "/notation"},
      {R"({"format_version": "1.0", "notation": "sacm"})", "/elements"},
      {envelope(R"({"gid": "C1", "kind": "Claim", "declaration": "maybe"})"), "/elements/0/declaration"},
      {envelope(R"({"gid": "C1", "kind": "Claim", "is_counter": "yes"})"), "/elements/0/is_counter"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const Error e = load_error(c.text);
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(e.subjects() == std::vector<std::string>{c.path});
  }
}

TEST_CASE("ownership cycles are rejected") {
  const Error e = load_error(envelope(R"({"gid": "A", "kind": "ArgumentPackage", "owner_gid": "B"},
      {"gid": "B", "kind": "ArgumentPackage", "owner_gid": "A"})"));
  CHECK(e.code() == ErrorCode::SchemaError);
}

TEST_CASE("parse errors carry line and column") {
  const Error e = load_error("{\n  \"elements\": [\n    oops\n");
  CHECK(e.code() == ErrorCode::ParseError);
  REQUIRE(e.subjects().size() == 2);
  CHECK(e.subjects()[0] == "3");
}

TEST_CASE("save omits defaults and sorts elements") {
  Model m;
  Element b;
  b.kind = Kind::ArgumentPackage;
  b.gid = "b";
  m.add(b);
  Element a = b;
  a.gid = "a";
  m.add(a);
  CHECK(save(m) ==
        "{\n  \"elements\": [\n    {\n      \"gid\": \"a\",\n      \"kind\": \"ArgumentPackage\"\n    },\n"
        "    {\n      \"gid\": \"b\",\n      \"kind\": \"ArgumentPackage\"\n    }\n  ],\n"
        "  \"format_version\": \"1.0\",\n  \"notation\": \"sacm\"\n}\n");
}

TEST_CASE("every field survives a round trip") {
  Model m;
  Element p;
  p.kind = Kind::ArgumentPackage;
  p.gid = "AP";
  m.add(p);
  Element e;
  e.kind = Kind::AssertedInference;
  e.gid = "R";
  e.owner = "AP";
  e.is_abstract = true;
  e.abstract_form = "R0";
  e.name = LangString{"en", "R", "EX"};
  e.description = MultiLangString({LangString{"en", "x", {}}, LangString{"de", "y", {}}});
  e.implementation_constraints = {MultiLangString("en", "one per function")};
  e.notes = {MultiLangString("ocl", "self->notEmpty()")};
  e.tagged_values = {TaggedValue{"sil", MultiLangString("en", "4")}};
  e.declaration = Declaration::assumed;
  e.meta_claims = {"AP"};
  e.sources = {"AP"};
  e.targets = {"AP"};
  e.is_counter = true;
  e.reasoning = "AP";
  e.many = ManyDecorator{"n = 3"};
  e.is_optional = true;
  e.choice = ChoiceDecorator{"g", 1, 2};
  m.add(e);
  const Model back = load(save(m), LoadOptions{.resolve_references = false});
  CHECK(isomorphic(m, back));
  CHECK(save(back) == save(m));
}

TEST_CASE("fixed point and round trip on every fixture file") {
  int files = 0;
  for (const auto& f : fixtures::all()) {
    const std::string bytes = read_file(fixtures::directory() / (f.name + ".acm.json"));
    const Model loaded = load(bytes, LoadOptions{.resolve_references = false});
    CAPTURE(f.name);
    CHECK(save(loaded) == bytes);
    CHECK(isomorphic(load(save(f.model), LoadOptions{.resolve_references = false}), f.model));
    CHECK(save(f.model) == save(f.model));
    ++files;
  }
  CHECK(files >= 20);
}

TEST_CASE("trace round trip") {
  const auto r = gsn_to_sacm(fixtures::r1());
  const std::string text = save_trace(r.trace);
  CHECK(load_trace(text) == r.trace);
  CHECK(save_trace(load_trace(text)) == text);
}

TEST_CASE("evidence and diagnostics JSON") {
  const auto ev = parse_evidence(R"({"S1": true, "S2": false})");
  CHECK(ev.at("S1"));
  CHECK_FALSE(ev.at("S2"));
  CHECK(error_of([] { parse_evidence(R"({"S1": 1})"); }) == ErrorCode::SchemaError);
  CHECK(error_of([] { parse_evidence("[]"); }) == ErrorCode::SchemaError);

  const std::vector<DiagnosticReport> reports{
      {"a.acm.json", Notation::gsn, {make_diagnostic("GSN-E1", {"SB4"}, "bad")}}};
  const std::string json = save_diagnostics(reports);
  CHECK(json.find("\"error_count\": 1") != std::string::npos);
  CHECK(json.find("\"warning_count\": 0") != std::string::npos);
  CHECK(json.find("\"rule_id\": \"GSN-E1\"") != std::string::npos);
}

TEST_CASE("missing files") {
  CHECK(error_of([] { read_file("/nonexistent/x.acm.json"); }) == ErrorCode::InvalidArgument);
}
