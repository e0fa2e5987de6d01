#include "acm/report.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "acm/artifact.hpp"
#include "acm/validate.hpp"

namespace acm {

namespace {

enum class Section { claims, relationships, argument, terminology, artifacts, other };

constexpr std::array kSections = {Section::claims,      Section::relationships, Section::argument,
                                  Section::terminology, Section::artifacts,     Section::other};

std::string_view title(Section s) {
  switch (s) {
    case Section::claims: return "Claims";
    case Section::relationships: return "Relationships";
    case Section::argument: return "Other argument elements";
    case Section::terminology: return "Terminology";
    case Section::artifacts: return "Artifacts";
    case Section::other: return "Other elements";
  }
  return "";
}

Section section_of(const Element& e) {
  if (e.is(Kind::Claim)) return Section::claims;
  if (is_relationship(e.kind) && e.kind != Kind::ArtifactAssetRelationship) return Section::relationships;
  if (e.is(Kind::ArgumentAsset)) return Section::argument;
  if (e.is(Kind::TerminologyAsset) || e.kind == Kind::TerminologyGroup) return Section::terminology;
  if (e.is(Kind::ArtifactAsset) || e.kind == Kind::Property || e.kind == Kind::ArtifactGroup) {
    return Section::artifacts;
  }
  return Section::other;
}

std::vector<std::string_view> headers(Section s) {
  switch (s) {
    case Section::claims: return {"gid", "kind", "name", "declaration", "text"};
    case Section::relationships: return {"gid", "kind", "sources", "targets", "reasoning", "notes"};
    case Section::argument: return {"gid", "kind", "name", "text", "refers to"};
    case Section::terminology: return {"gid", "kind", "value", "references"};
    case Section::artifacts: return {"gid", "kind", "name", "text", "location"};
    case Section::other: return {"gid", "kind", "name", "text"};
  }
  return {};
}

std::string join(const std::vector<Gid>& gids) {
  std::string out;
  for (const auto& g : gids) out += (out.empty() ? "" : ", ") + g;
  return out.empty() ? "-" : out;
}

class Renderer {
 public:
  Renderer(const Model& m, const ReportOptions& o) : model_(m), options_(o) {}

  std::string run() {
    md() ? out_ << "# Assurance case report\n" : out_ << "ASSURANCE CASE REPORT\n=====================\n";
    if (model_.empty()) return out_.str();
    out_ << "\n" << (md() ? "Notation: " : "notation: ") << to_string(model_.notation())
         << ", elements: " << model_.size() << "\n";

    std::map<Gid, std::vector<const Element*>> by_package;
    std::vector<const Element*> packages;
    for (const auto& e : model_.elements()) {
      if (is_package(e.kind)) {
        packages.push_back(&e);
        continue;
      }
      by_package[owning_package(model_, e.gid)].push_back(&e);
    }
    for (auto& [_, list] : by_package) {
      std::ranges::sort(list, [](const Element* a, const Element* b) { return a->gid < b->gid; });
    }
    by_package_ = std::move(by_package);

    std::vector<const Element*> top;
    for (const Element* p : packages) {
      if (owning_package(model_, p->gid).empty()) top.push_back(p);
    }
    std::ranges::sort(top, [](const Element* a, const Element* b) { return a->gid < b->gid; });
    for (const Element* p : top) package(*p, 2);

    if (auto it = by_package_.find(""); it != by_package_.end()) {
      heading(2, "Unpackaged elements");
      tables(it->second);
    }
    if (options_.include_diagnostics) diagnostics();
    return out_.str();
  }

 private:
  [[nodiscard]] bool md() const { return options_.format == ReportFormat::md; }

  std::string mark(const Gid& gid) const { return md() ? "`" + gid + "`" : "[" + gid + "]"; }

  std::string cell(std::string text) const {
    std::ranges::replace(text, '\n', ' ');
    if (!md()) return text;
    std::string out;
    for (char c : text) {
      if (c == '|') out += '\\';
      out += c;
    }
    return out;
  }

  std::string text_of(const Element& e) const {
    const MultiLangString* m = nullptr;
    if (!e.description.empty()) {
      m = &e.description;
    } else if (!e.content.empty()) {
      m = &e.content;
    }
    if (m != nullptr) return localize(*m, options_.lang);
    return e.statement;
  }

  std::string name_of(const Element& e) const { return e.name ? e.name->content : ""; }

  void heading(int level, const std::string& text) {
    if (md()) {
      out_ << "\n" << std::string(static_cast<std::size_t>(std::min(level, 6)), '#') << " " << text << "\n";
    } else {
      out_ << "\n" << text << "\n" << std::string(text.size(), level <= 2 ? '=' : '-') << "\n";
    }
  }

  void package(const Element& p, int level) {
    std::string label = p.name ? p.name->content : p.gid;
    heading(level, label + " (" + mark(p.gid) + ", " + std::string(to_string(p.kind)) + ")");
    if (const std::string text = text_of(p); !text.empty()) out_ << "\n" << text << "\n";
    if (!p.participant_packages.empty()) out_ << "\nParticipants: " << join(p.participant_packages) << "\n";
    if (p.is_citation) out_ << "\nCites: " << p.cited_element << "\n";
    if (auto it = by_package_.find(p.gid); it != by_package_.end()) tables(it->second);

    std::vector<const Element*> children;
    for (const auto& e : model_.elements()) {
      if (is_package(e.kind) && e.owner == p.gid) children.push_back(&e);
    }
    // Packages may hang below non-package elements; keep them reachable.
    for (const auto& e : model_.elements()) {
      if (is_package(e.kind) && !e.owner.empty() && e.owner != p.gid &&
          owning_package(model_, e.gid) == p.gid) {
        children.push_back(&e);
      }
    }
    std::ranges::sort(children, [](const Element* a, const Element* b) { return a->gid < b->gid; });
    for (const Element* c : children) package(*c, level + 1);
  }

  void tables(const std::vector<const Element*>& elements) {
    for (Section s : kSections) {
      if (s == Section::terminology && !options_.include_terminology) continue;
      std::vector<const Element*> rows;
      for (const Element* e : elements) {
        if (section_of(*e) == s) rows.push_back(e);
      }
      if (rows.empty()) continue;
      out_ << "\n" << (md() ? "**" + std::string(title(s)) + "**" : std::string(title(s)) + ":") << "\n\n";
      const auto cols = headers(s);
      if (md()) {
        out_ << "|";
        for (auto h : cols) out_ << " " << h << " |";
        out_ << "\n|";
        for (std::size_t i = 0; i < cols.size(); ++i) out_ << " --- |";
        out_ << "\n";
      }
      for (const Element* e : rows) row(s, *e);
    }
  }

  std::vector<std::string> fields(Section s, const Element& e) const {
    const std::string kind(to_string(e.kind));
    std::string flags;
    if (e.is_abstract) flags += " (abstract)";
    if (e.is_citation) flags += " (cites " + e.cited_element + ")";
    switch (s) {
      case Section::claims: {
        std::string text = text_of(e);
        if (!e.meta_claims.empty()) text += " [meta-claims: " + join(e.meta_claims) + "]";
        return {kind + flags, name_of(e), std::string(to_string(e.declaration)), text};
      }
      case Section::relationships: {
        std::vector<std::string> notes;
        if (e.is_counter) notes.emplace_back("counter");
        if (e.declaration != Declaration::asserted) notes.emplace_back(to_string(e.declaration));
        if (e.many) notes.push_back("many " + e.many->label);
        if (e.is_optional) notes.emplace_back("optional");
        if (e.choice) notes.push_back("choice " + e.choice->group);
        return {kind + flags, join(e.sources), join(e.targets), e.reasoning.empty() ? "-" : e.reasoning,
                join(notes)};
      }
      case Section::argument: {
        std::string refers = e.referenced_artifact;
        if (!e.module_ref.empty()) refers += (refers.empty() ? "" : ", ") + e.module_ref;
        return {kind + flags, name_of(e), text_of(e), refers.empty() ? "-" : refers};
      }
      case Section::terminology: {
        std::vector<Gid> refs;
        for (const auto& [label, gid] : e.element_refs) refs.push_back(label + " = " + gid);
        for (const auto& m : e.members) refs.push_back(m);
        if (!e.origin.empty()) refs.push_back("origin " + e.origin);
        if (!e.external_reference.empty()) refs.push_back(e.external_reference);
        std::string value = e.value.empty() ? name_of(e) : e.value;
        return {kind + flags, value, join(refs)};
      }
      case Section::artifacts: {
        std::string location = "-";
        if (const Element* uri = find_property(model_, e.gid, kUriProperty)) {
          location = localize(uri->description, options_.lang);
        }
        if (e.kind == Kind::ArtifactAssetRelationship) {
          location = join(e.sources) + " -> " + join(e.targets);
        }
        if (!e.members.empty()) location = join(e.members);
        std::string text = e.description.empty() ? "" : localize(e.description, options_.lang);
        return {kind + flags, name_of(e), text, location};
      }
      case Section::other:
        return {kind + flags, name_of(e), text_of(e)};
    }
    return {};
  }

  void row(Section s, const Element& e) {
    const auto values = fields(s, e);
    if (md()) {
      out_ << "| " << mark(e.gid) << " |";
      for (const auto& v : values) out_ << " " << cell(v.empty() ? "-" : v) << " |";
      out_ << "\n";
      return;
    }
    out_ << "  " << mark(e.gid);
    for (const auto& v : values) {
      if (!v.empty() && v != "-") out_ << " | " << cell(v);
    }
    out_ << "\n";
  }

  void diagnostics() {
    const auto list = check(model_);
    heading(2, "Diagnostics");
    out_ << "\n";
    if (list.empty()) {
      out_ << "No findings.\n";
      return;
    }
    for (const auto& d : list) out_ << (md() ? "- " : "  ") << cell(format_diagnostic(d)) << "\n";
  }

  const Model& model_;
  const ReportOptions& options_;
  std::ostringstream out_;
  std::map<Gid, std::vector<const Element*>> by_package_;
};

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "md") return ReportFormat::md;
  if (text == "txt") return ReportFormat::txt;
  return std::nullopt;
}

std::string render(const Model& model, const ReportOptions& options) {
  return Renderer(model, options).run();
}

}  // namespace acm
