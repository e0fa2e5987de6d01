#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "acm/element.hpp"
#include "acm/error.hpp"

namespace acm {

/// A model document: a flat, gid-indexed list of elements in document order.
///
/// The document is a value. Copy it to branch; mutate only from one thread.
/// References returned by add()/at() are invalidated by the next add().
class Model {
 public:
  explicit Model(Notation notation = Notation::sacm) : notation_(notation) {}

  [[nodiscard]] Notation notation() const { return notation_; }
  void set_notation(Notation notation) { notation_ = notation; }

  [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool empty() const { return elements_.empty(); }

  [[nodiscard]] bool contains(std::string_view gid) const { return index_.contains(gid); }
  [[nodiscard]] const Element* find(std::string_view gid) const;
  Element* find(std::string_view gid);
  /// Throws MissingElement.
  [[nodiscard]] const Element& at(std::string_view gid) const;
  Element& at(std::string_view gid);

  /// Appends `element`; a missing gid is generated. Throws DuplicateGid.
  Element& add(Element element);

  /// Elements whose owner is `owner`, in document order.
  [[nodiscard]] std::vector<const Element*> children_of(std::string_view owner) const;
  /// True when `gid` is `ancestor` or is transitively owned by it.
  [[nodiscard]] bool owned_by(std::string_view gid, std::string_view ancestor) const;

  /// A random UUID-style gid not yet used in this document.
  [[nodiscard]] Gid fresh_gid() const;

  friend bool operator==(const Model& a, const Model& b) {
    return a.notation_ == b.notation_ && a.elements_ == b.elements_;
  }

 private:
  Notation notation_;
  std::vector<Element> elements_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A document holding one empty AssuranceCasePackage named `root_name`.
Model create_model(std::string_view root_name, std::string_view lang = "en");

/// Adds a package of `kind` under `owner` (empty owner: top level).
Gid add_package(Model& model, Kind kind, std::string_view owner, std::string_view name,
                std::string_view gid = {});

/// True when `citing` may cite `cited`: Claim and Claim, ArtifactReference and
/// any ArtifactElement, packages of the same family, or identical kinds.
bool citation_compatible(Kind citing, Kind cited);

/// Makes `citing` a citation of `cited`. A citing Claim becomes asCited.
/// Throws MissingElement or KindMismatch.
void cite(Model& model, std::string_view citing, std::string_view cited);

struct CitationChain {
  Gid terminal;
  std::vector<Gid> chain;  // starts with the queried gid, ends with terminal
};

/// Follows cited_element links to the first non-citation element.
/// Throws CitationCycle (subjects = the cycle) or MissingElement.
CitationChain resolve_citation(const Model& model, std::string_view start);

/// The nearest package that transitively owns `gid`, or empty.
Gid owning_package(const Model& model, std::string_view gid);

}  // namespace acm
