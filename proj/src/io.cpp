#include "acm/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace acm {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what, {path});
}

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, bytes.size());
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset; ++i) {
      if (bytes[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    const std::size_t column = offset - line_start + 1;
    throw Error(ErrorCode::ParseError,
                "invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(column),
                {std::to_string(line), std::to_string(column)});
  }
}

std::string dump(const json& j) { return j.dump(2, ' ', false) + "\n"; }

// ---- writing ---------------------------------------------------------------

json lang_string_json(const LangString& s) {
  json j = {{"lang", s.lang}, {"content", s.content}};
  if (!s.expression_ref.empty()) j["expression_ref"] = s.expression_ref;
  return j;
}

json multi_json(const MultiLangString& m) {
  json a = json::array();
  for (const auto& v : m.values()) a.push_back(lang_string_json(v));
  return a;
}

json element_json(const Element& e) {
  json j = json::object();
  j["gid"] = e.gid;
  j["kind"] = to_string(e.kind);
  if (!e.owner.empty()) j["owner_gid"] = e.owner;
  auto text = [&](const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
  };
  auto flag = [&](const char* key, bool v) {
    if (v) j[key] = true;
  };
  auto list = [&](const char* key, const std::vector<Gid>& v) {
    if (!v.empty()) j[key] = v;
  };
  flag("is_citation", e.is_citation);
  text("cited_element", e.cited_element);
  flag("is_abstract", e.is_abstract);
  text("abstract_form", e.abstract_form);
  if (e.name) j["name"] = lang_string_json(*e.name);
  if (!e.description.empty()) j["description"] = multi_json(e.description);
  auto multi_list = [&](const char* key, const std::vector<MultiLangString>& v) {
    if (v.empty()) return;
    json a = json::array();
    for (const auto& m : v) a.push_back(multi_json(m));
    j[key] = a;
  };
  multi_list("implementation_constraints", e.implementation_constraints);
  multi_list("notes", e.notes);
  if (!e.tagged_values.empty()) {
    json a = json::array();
    for (const auto& t : e.tagged_values) a.push_back({{"key", t.key}, {"value", multi_json(t.value)}});
    j["tagged_values"] = a;
  }
  if (!e.content.empty()) j["content"] = multi_json(e.content);
  if (e.declaration != Declaration::asserted) j["declaration"] = to_string(e.declaration);
  list("meta_claims", e.meta_claims);
  list("source_ids", e.sources);
  list("target_ids", e.targets);
  flag("is_counter", e.is_counter);
  text("reasoning_id", e.reasoning);
  if (e.many) j["many"] = {{"label", e.many->label}};
  flag("optional", e.is_optional);
  if (e.choice) j["choice"] = {{"group", e.choice->group}, {"min", e.choice->min}, {"max", e.choice->max}};
  text("referenced_artifact", e.referenced_artifact);
  text("statement", e.statement);
  list("participant_packages", e.participant_packages);
  list("member_ids", e.members);
  text("value", e.value);
  text("external_reference", e.external_reference);
  text("origin", e.origin);
  if (!e.element_refs.empty()) j["element_refs"] = e.element_refs;
  flag("undeveloped", e.undeveloped);
  flag("to_be_supported_by_contract", e.to_be_supported_by_contract);
  flag("public", e.is_public);
  text("module_ref", e.module_ref);
  return j;
}

// ---- reading ---------------------------------------------------------------

class Reader {
 public:
  static const json& object(const json& j, const std::string& path) {
    if (!j.is_object()) schema_error(path, "expected an object");
    return j;
  }
  static std::string string(const json& j, const std::string& path, bool non_empty = false) {
    if (!j.is_string()) schema_error(path, "expected a string");
    auto s = j.get<std::string>();
    if (non_empty && s.empty()) schema_error(path, "must not be empty");
    return s;
  }
  static bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) schema_error(path, "expected a boolean");
    return j.get<bool>();
  }
  static int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    return j.get<int>();
  }
  static std::vector<Gid> gids(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of gids");
    std::vector<Gid> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], path + "/" + std::to_string(i), true));
    return out;
  }
  static LangString lang_string(const json& j, const std::string& path) {
    object(j, path);
    LangString s;
    bool has_lang = false;
    bool has_content = false;
    for (const auto& [key, v] : j.items()) {
      const std::string p = path + "/" + key;
      if (key == "lang") {
        s.lang = string(v, p, true);
        has_lang = true;
      } else if (key == "content") {
        s.content = string(v, p);
        has_content = true;
      } else if (key == "expression_ref") {
        s.expression_ref = string(v, p, true);
      } else {
        schema_error(p, "unknown key");
      }
    }
    if (!has_lang) schema_error(path + "/lang", "missing");
    if (!has_content) schema_error(path + "/content", "missing");
    return s;
  }
  static MultiLangString multi(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of language strings");
    MultiLangString m;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "/" + std::to_string(i);
      try {
        m.add(lang_string(j[i], p));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SchemaError) throw;
        schema_error(p, "duplicate or empty language tag");
      }
    }
    return m;
  }
  static std::vector<MultiLangString> multi_list(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array");
    std::vector<MultiLangString> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(multi(j[i], path + "/" + std::to_string(i)));
    return out;
  }
};

Element read_element(const json& j, const std::string& path, Notation notation) {
  using R = Reader;
  R::object(j, path);
  Element e;
  if (!j.contains("gid")) schema_error(path + "/gid", "missing");
  if (!j.contains("kind")) schema_error(path + "/kind", "missing");
  for (const auto& [key, v] : j.items()) {
    const std::string p = path + "/" + key;
    if (key == "gid") {
      e.gid = R::string(v, p, true);
    } else if (key == "kind") {
      const std::string name = R::string(v, p);
      auto kind = parse_kind(name);
      if (!kind) schema_error(p, "unknown kind '" + name + "'");
      if (!allowed_in(*kind, notation)) {
        schema_error(p, "kind '" + name + "' is not allowed in a " + std::string(to_string(notation)) +
                            " document");
      }
      e.kind = *kind;
    } else if (key == "owner_gid") {
      e.owner = R::string(v, p, true);
    } else if (key == "is_citation") {
      e.is_citation = R::boolean(v, p);
    } else if (key == "cited_element") {
      e.cited_element = R::string(v, p, true);
    } else if (key == "is_abstract") {
      e.is_abstract = R::boolean(v, p);
    } else if (key == "abstract_form") {
      e.abstract_form = R::string(v, p, true);
    } else if (key == "name") {
      e.name = R::lang_string(v, p);
    } else if (key == "description") {
      e.description = R::multi(v, p);
    } else if (key == "implementation_constraints") {
      e.implementation_constraints = R::multi_list(v, p);
    } else if (key == "notes") {
      e.notes = R::multi_list(v, p);
    } else if (key == "tagged_values") {
      if (!v.is_array()) schema_error(p, "expected an array");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string tp = p + "/" + std::to_string(i);
        R::object(v[i], tp);
        TaggedValue t;
        for (const auto& [tk, tv] : v[i].items()) {
          if (tk == "key") {
            t.key = R::string(tv, tp + "/key", true);
          } else if (tk == "value") {
            t.value = R::multi(tv, tp + "/value");
          } else {
            schema_error(tp + "/" + tk, "unknown key");
          }
        }
        if (t.key.empty()) schema_error(tp + "/key", "missing");
        e.tagged_values.push_back(std::move(t));
      }
    } else if (key == "content") {
      e.content = R::multi(v, p);
    } else if (key == "declaration") {
      const std::string name = R::string(v, p);
      auto d = parse_declaration(name);
      if (!d) schema_error(p, "unknown declaration '" + name + "'");
      e.declaration = *d;
    } else if (key == "meta_claims") {
      e.meta_claims = R::gids(v, p);
    } else if (key == "source_ids") {
      e.sources = R::gids(v, p);
    } else if (key == "target_ids") {
      e.targets = R::gids(v, p);
    } else if (key == "is_counter") {
      e.is_counter = R::boolean(v, p);
    } else if (key == "reasoning_id") {
      e.reasoning = R::string(v, p, true);
    } else if (key == "many") {
      R::object(v, p);
      ManyDecorator m;
      for (const auto& [mk, mv] : v.items()) {
        if (mk != "label") schema_error(p + "/" + mk, "unknown key");
        m.label = R::string(mv, p + "/label");
      }
      e.many = m;
    } else if (key == "optional") {
      e.is_optional = R::boolean(v, p);
    } else if (key == "choice") {
      R::object(v, p);
      ChoiceDecorator c;
      for (const auto& [ck, cv] : v.items()) {
        if (ck == "group") {
          c.group = R::string(cv, p + "/group");
        } else if (ck == "min") {
          c.min = R::integer(cv, p + "/min");
        } else if (ck == "max") {
          c.max = R::integer(cv, p + "/max");
        } else {
          schema_error(p + "/" + ck, "unknown key");
        }
      }
      if (c.min < 0 || c.max < c.min) schema_error(p, "needs 0 <= min <= max");
      e.choice = c;
    } else if (key == "referenced_artifact") {
      e.referenced_artifact = R::string(v, p, true);
    } else if (key == "statement") {
      e.statement = R::string(v, p);
    } else if (key == "participant_packages") {
      e.participant_packages = R::gids(v, p);
    } else if (key == "member_ids") {
      e.members = R::gids(v, p);
    } else if (key == "value") {
      e.value = R::string(v, p);
    } else if (key == "external_reference") {
      e.external_reference = R::string(v, p);
    } else if (key == "origin") {
      e.origin = R::string(v, p, true);
    } else if (key == "element_refs") {
      R::object(v, p);
      for (const auto& [label, gid] : v.items()) {
        if (label.empty()) schema_error(p, "empty label");
        e.element_refs[label] = R::string(gid, p + "/" + label, true);
      }
    } else if (key == "undeveloped") {
      e.undeveloped = R::boolean(v, p);
    } else if (key == "to_be_supported_by_contract") {
      e.to_be_supported_by_contract = R::boolean(v, p);
    } else if (key == "public") {
      e.is_public = R::boolean(v, p);
    } else if (key == "module_ref") {
      e.module_ref = R::string(v, p, true);
    } else {
      schema_error(p, "unknown key");
    }
  }
  return e;
}

}  // namespace

Model load(std::string_view bytes, LoadOptions options) {
  const json root = parse_json(bytes);
  Reader::object(root, "");
  for (const char* required : {"format_version", "notation", "elements"}) {
    if (!root.contains(required)) schema_error("/" + std::string(required), "missing");
  }
  for (const auto& [key, v] : root.items()) {
    if (key != "format_version" && key != "notation" && key != "elements") {
      schema_error("/" + key, "unknown key");
    }
  }
  const std::string version = Reader::string(root["format_version"], "/format_version");
  if (version != kFormatVersion) {
    schema_error("/format_version", "unsupported version '" + version + "'");
  }
  const std::string notation_name = Reader::string(root["notation"], "/notation");
  const auto notation = parse_notation(notation_name);
  if (!notation) schema_error("/notation", "unknown notation '" + notation_name + "'");

  const json& elements = root["elements"];
  if (!elements.is_array()) schema_error("/elements", "expected an array");
  Model model(*notation);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string path = "/elements/" + std::to_string(i);
    Element e = read_element(elements[i], path, *notation);
    if (model.contains(e.gid)) schema_error(path + "/gid", "duplicate gid '" + e.gid + "'");
    model.add(std::move(e));
  }

  // Ownership must form a forest.
  for (std::size_t i = 0; i < model.size(); ++i) {
    std::set<std::string_view> seen;
    const Element* cur = &model.elements()[i];
    while (cur != nullptr && !cur->owner.empty()) {
      if (!seen.insert(cur->gid).second) {
        schema_error("/elements/" + std::to_string(i) + "/owner_gid", "ownership cycle through '" + cur->gid + "'");
      }
      cur = model.find(cur->owner);
    }
  }

  if (options.resolve_references) {
    std::set<Gid> dangling;
    for (const auto& e : model.elements()) {
      for_each_reference(e, [&](RefField field, const Gid& gid) {
        if (field == RefField::abstract_form || field == RefField::expression_ref) return;
        if (!model.contains(gid)) dangling.insert(gid);
      });
    }
    if (!dangling.empty()) {
      std::vector<Gid> gids(dangling.begin(), dangling.end());
      std::string list;
      for (const auto& g : gids) list += (list.empty() ? "" : ", ") + g;
      throw Error(ErrorCode::DanglingReference, "unresolved gid(s): " + list, gids);
    }
  }
  return model;
}

std::string save(const Model& model) {
  std::vector<const Element*> sorted;
  sorted.reserve(model.size());
  for (const auto& e : model.elements()) sorted.push_back(&e);
  std::ranges::sort(sorted, [](const Element* a, const Element* b) { return a->gid < b->gid; });
  json elements = json::array();
  for (const Element* e : sorted) elements.push_back(element_json(*e));
  json root = {{"format_version", kFormatVersion},
               {"notation", to_string(model.notation())},
               {"elements", std::move(elements)}};
  return dump(root);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path.string() + "'", {path.string()});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'", {path.string()});
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'", {path.string()});
}

Model load_file(const std::filesystem::path& path, LoadOptions options) {
  return load(read_file(path), options);
}

void save_file(const std::filesystem::path& path, const Model& model) { write_file(path, save(model)); }

std::string save_trace(std::span<const TraceLink> links) {
  json a = json::array();
  for (const auto& l : links) {
    a.push_back({{"rule", l.rule}, {"source_gid", l.source_gid}, {"result_gid", l.result_gid}});
  }
  return dump({{"format_version", kFormatVersion}, {"links", std::move(a)}});
}

std::vector<TraceLink> load_trace(std::string_view bytes) {
  const json root = parse_json(bytes);
  Reader::object(root, "");
  if (!root.contains("links") || !root["links"].is_array()) schema_error("/links", "expected an array");
  std::vector<TraceLink> out;
  const json& links = root["links"];
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string p = "/links/" + std::to_string(i);
    Reader::object(links[i], p);
    TraceLink l;
    for (const char* key : {"rule", "source_gid", "result_gid"}) {
      if (!links[i].contains(key)) schema_error(p + "/" + key, "missing");
    }
    l.rule = Reader::string(links[i]["rule"], p + "/rule", true);
    l.source_gid = Reader::string(links[i]["source_gid"], p + "/source_gid", true);
    l.result_gid = Reader::string(links[i]["result_gid"], p + "/result_gid", true);
    out.push_back(std::move(l));
  }
  return out;
}

std::string save_diagnostics(std::span<const DiagnosticReport> reports) {
  json docs = json::array();
  for (const auto& r : reports) {
    json list = json::array();
    int errors = 0;
    for (const auto& d : r.diagnostics) {
      if (d.severity == Severity::error) ++errors;
      list.push_back({{"rule_id", d.rule_id},
                      {"severity", to_string(d.severity)},
                      {"element_gids", d.element_gids},
                      {"message", d.message}});
    }
    docs.push_back({{"path", r.path},
                    {"notation", to_string(r.notation)},
                    {"diagnostics", std::move(list)},
                    {"error_count", errors},
                    {"warning_count", static_cast<int>(r.diagnostics.size()) - errors}});
  }
  return dump({{"format_version", kFormatVersion}, {"documents", std::move(docs)}});
}

EvidenceStatus parse_evidence(std::string_view bytes) {
  const json root = parse_json(bytes);
  Reader::object(root, "");
  EvidenceStatus out;
  for (const auto& [gid, v] : root.items()) out[gid] = Reader::boolean(v, "/" + gid);
  return out;
}

BindingTable parse_binding_table(std::string_view bytes) {
  const json root = parse_json(bytes);
  Reader::object(root, "");
  BindingTable table;
  for (const auto& [key, v] : root.items()) {
    if (key == "roles") {
      Reader::object(v, "/roles");
      for (const auto& [role, values] : v.items()) {
        const std::string p = "/roles/" + role;
        if (role.empty()) schema_error(p, "empty role");
        RoleBinding b{role, {}};
        if (values.is_string()) {
          b.values.push_back(values.get<std::string>());
        } else if (values.is_array()) {
          for (std::size_t i = 0; i < values.size(); ++i) {
            b.values.push_back(Reader::string(values[i], p + "/" + std::to_string(i)));
          }
        } else {
          schema_error(p, "expected a string or an array of strings");
        }
        if (b.values.empty()) schema_error(p, "needs at least one value");
        table.entries.push_back(std::move(b));
      }
    } else if (key == "connectors") {
      Reader::object(v, "/connectors");
      for (const auto& [gid, spec] : v.items()) {
        const std::string p = "/connectors/" + gid;
        Reader::object(spec, p);
        ConnectorChoice c;
        for (const auto& [ck, cv] : spec.items()) {
          if (ck == "count") {
            c.count = Reader::integer(cv, p + "/count");
            if (*c.count < 0) schema_error(p + "/count", "must not be negative");
          } else if (ck == "chosen") {
            c.chosen = Reader::boolean(cv, p + "/chosen");
          } else if (ck == "subset") {
            c.subset = Reader::gids(cv, p + "/subset");
          } else {
            schema_error(p + "/" + ck, "unknown key");
          }
        }
        if (spec.size() != 1) schema_error(p, "expected exactly one of count, chosen, subset");
        table.connectors[gid] = std::move(c);
      }
    } else {
      schema_error("/" + key, "unknown key");
    }
  }
  return table;
}

}  // namespace acm
