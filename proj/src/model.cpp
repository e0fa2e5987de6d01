#include "acm/model.hpp"

#include <algorithm>
#include <boost/uuid/random_generator.hpp>
#include <boost/uuid/uuid_io.hpp>
#include <set>

namespace acm {

const Element* Model::find(std::string_view gid) const {
  auto it = index_.find(gid);
  return it == index_.end() ? nullptr : &elements_[it->second];
}

Element* Model::find(std::string_view gid) {
  auto it = index_.find(gid);
  return it == index_.end() ? nullptr : &elements_[it->second];
}

const Element& Model::at(std::string_view gid) const {
  if (const auto* e = find(gid)) return *e;
  throw Error(ErrorCode::MissingElement, "no element with gid '" + std::string(gid) + "'",
              {std::string(gid)});
}

Element& Model::at(std::string_view gid) {
  if (auto* e = find(gid)) return *e;
  throw Error(ErrorCode::MissingElement, "no element with gid '" + std::string(gid) + "'",
              {std::string(gid)});
}

Element& Model::add(Element element) {
  if (element.gid.empty()) element.gid = fresh_gid();
  if (contains(element.gid)) {
    throw Error(ErrorCode::DuplicateGid, "gid '" + element.gid + "' already in use", {element.gid});
  }
  index_.emplace(element.gid, elements_.size());
  elements_.push_back(std::move(element));
  return elements_.back();
}

std::vector<const Element*> Model::children_of(std::string_view owner) const {
  std::vector<const Element*> out;
  for (const auto& e : elements_) {
    if (e.owner == owner) out.push_back(&e);
  }
  return out;
}

bool Model::owned_by(std::string_view gid, std::string_view ancestor) const {
  std::set<std::string_view> seen;
  for (const Element* e = find(gid); e != nullptr; e = find(e->owner)) {
    if (e->gid == ancestor) return true;
    if (!seen.insert(e->gid).second) return false;
  }
  return false;
}

Gid Model::fresh_gid() const {
  thread_local boost::uuids::random_generator generate;
  for (;;) {
    Gid gid = boost::uuids::to_string(generate());
    if (!contains(gid)) return gid;
  }
}

Model create_model(std::string_view root_name, std::string_view lang) {
  if (root_name.empty()) throw Error(ErrorCode::InvalidArgument, "root package name must not be empty");
  Model model(Notation::sacm);
  add_package(model, Kind::AssuranceCasePackage, {}, root_name);
  model.at(model.elements().front().gid).name->lang = std::string(lang);
  return model;
}

Gid add_package(Model& model, Kind kind, std::string_view owner, std::string_view name,
                std::string_view gid) {
  if (!is_package(kind)) {
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(kind)) + " is not a package kind");
  }
  if (!owner.empty()) {
    const Element& parent = model.at(owner);
    if (!is_package(parent.kind)) {
      throw Error(ErrorCode::KindMismatch, "packages nest only inside packages", {parent.gid});
    }
  }
  Element e;
  e.gid = std::string(gid);
  e.kind = kind;
  e.owner = std::string(owner);
  if (!name.empty()) e.name = LangString{"en", std::string(name), {}};
  return model.add(std::move(e)).gid;
}

bool citation_compatible(Kind citing, Kind cited) {
  if (is_a(citing, Kind::Claim)) return is_a(cited, Kind::Claim);
  if (is_a(citing, Kind::ArtifactReference)) return is_a(cited, Kind::ArtifactElement);
  if (is_package(citing)) return package_family(citing) == package_family(cited);
  return citing == cited;
}

void cite(Model& model, std::string_view citing, std::string_view cited) {
  const Kind cited_kind = model.at(cited).kind;
  Element& e = model.at(citing);
  if (!citation_compatible(e.kind, cited_kind)) {
    throw Error(ErrorCode::KindMismatch,
                std::string(to_string(e.kind)) + " cannot cite " + std::string(to_string(cited_kind)),
                {e.gid, std::string(cited)});
  }
  e.is_citation = true;
  e.cited_element = std::string(cited);
  if (e.is(Kind::Claim)) e.declaration = Declaration::asCited;
}

CitationChain resolve_citation(const Model& model, std::string_view start) {
  CitationChain result;
  const Element* e = &model.at(start);
  while (true) {
    auto seen = std::ranges::find(result.chain, e->gid);
    if (seen != result.chain.end()) {
      std::vector<std::string> cycle(seen, result.chain.end());
      throw Error(ErrorCode::CitationCycle, "citation cycle through '" + e->gid + "'", cycle);
    }
    result.chain.push_back(e->gid);
    if (!e->is_citation) break;
    if (e->cited_element.empty()) {
      throw Error(ErrorCode::MissingElement, "citation '" + e->gid + "' has no cited element", {e->gid});
    }
    const Element* next = model.find(e->cited_element);
    if (next == nullptr) {
      throw Error(ErrorCode::MissingElement,
                  "'" + e->gid + "' cites missing element '" + e->cited_element + "'",
                  {e->cited_element});
    }
    e = next;
  }
  result.terminal = result.chain.back();
  return result;
}

Gid owning_package(const Model& model, std::string_view gid) {
  const Element* e = model.find(gid);
  std::set<std::string_view> seen;
  while (e != nullptr && !e->owner.empty() && seen.insert(e->gid).second) {
    const Element* owner = model.find(e->owner);
    if (owner == nullptr) return {};
    if (is_package(owner->kind)) return owner->gid;
    e = owner;
  }
  return {};
}

std::string_view to_string(RefField field) {
  switch (field) {
    case RefField::owner: return "owner_gid";
    case RefField::cited_element: return "cited_element";
    case RefField::abstract_form: return "abstract_form";
    case RefField::meta_claim: return "meta_claims";
    case RefField::source: return "source_ids";
    case RefField::target: return "target_ids";
    case RefField::reasoning: return "reasoning_id";
    case RefField::referenced_artifact: return "referenced_artifact";
    case RefField::participant_package: return "participant_packages";
    case RefField::member: return "member_ids";
    case RefField::origin: return "origin";
    case RefField::element_ref: return "element_refs";
    case RefField::module_ref: return "module_ref";
    case RefField::expression_ref: return "expression_ref";
  }
  return "?";
}

}  // namespace acm
