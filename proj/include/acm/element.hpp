#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "acm/kind.hpp"
#include "acm/lang_string.hpp"

namespace acm {

using Gid = std::string;

struct TaggedValue {
  std::string key;
  MultiLangString value;
  friend bool operator==(const TaggedValue&, const TaggedValue&) = default;
};

// Pattern decorators carried by connectors.
struct ManyDecorator {
  std::string label;  // the "n = ..." text, verbatim
  friend bool operator==(const ManyDecorator&, const ManyDecorator&) = default;
};

struct ChoiceDecorator {
  std::string group;
  int min = 1;
  int max = 1;
  friend bool operator==(const ChoiceDecorator&, const ChoiceDecorator&) = default;
};

/// One node of a model document. SACM, GSN and CAE elements share this
/// record; `kind` decides which field groups are meaningful. Cross
/// references are gids, never pointers, and an empty gid means "unset".
struct Element {
  Gid gid;
  Kind kind = Kind::Claim;
  Gid owner;

  // SACMElement
  bool is_citation = false;
  Gid cited_element;
  bool is_abstract = false;
  Gid abstract_form;

  // ModelElement
  std::optional<LangString> name;
  MultiLangString description;
  std::vector<MultiLangString> implementation_constraints;
  std::vector<MultiLangString> notes;
  std::vector<TaggedValue> tagged_values;

  // ArgumentAsset
  MultiLangString content;

  // Assertion
  Declaration declaration = Declaration::asserted;
  std::vector<Gid> meta_claims;

  // AssertedRelationship, ArtifactAssetRelationship, GSN/CAE connectors
  std::vector<Gid> sources;
  std::vector<Gid> targets;
  bool is_counter = false;
  Gid reasoning;
  std::optional<ManyDecorator> many;
  bool is_optional = false;
  std::optional<ChoiceDecorator> choice;

  // ArtifactReference and GSN Context
  Gid referenced_artifact;
  std::string statement;

  // package bindings
  std::vector<Gid> participant_packages;

  // ArtifactGroup, TerminologyGroup, Category
  std::vector<Gid> members;

  // Term, Expression, Category
  std::string value;
  std::string external_reference;
  Gid origin;
  std::map<std::string, Gid> element_refs;  // placeholder label -> Term/Expression

  // GSN
  bool undeveloped = false;
  bool to_be_supported_by_contract = false;
  bool is_public = false;
  Gid module_ref;

  [[nodiscard]] bool is(Kind base) const { return is_a(kind, base); }
  [[nodiscard]] bool decorated() const { return many.has_value() || is_optional || choice.has_value(); }
  /// Name content when present, else the gid.
  [[nodiscard]] std::string label() const { return name ? name->content : gid; }

  friend bool operator==(const Element&, const Element&) = default;
};

enum class RefField {
  owner,
  cited_element,
  abstract_form,
  meta_claim,
  source,
  target,
  reasoning,
  referenced_artifact,
  participant_package,
  member,
  origin,
  element_ref,
  module_ref,
  expression_ref,
};

std::string_view to_string(RefField field);

namespace detail {
template <class Text, class F>
void visit_expression_refs(Text& text, F& fn) {
  for (auto& v : text.mutable_values()) {
    if (!v.expression_ref.empty()) fn(RefField::expression_ref, v.expression_ref);
  }
}
template <class Text, class F>
void visit_expression_refs_const(const Text& text, F& fn) {
  for (const auto& v : text.values()) {
    if (!v.expression_ref.empty()) fn(RefField::expression_ref, v.expression_ref);
  }
}
}  // namespace detail

/// Calls fn(RefField, gid&) for every non-empty gid reference held by `e`.
/// Works on const and non-const elements; the non-const form allows remapping.
template <class E, class F>
  requires std::is_same_v<std::remove_const_t<E>, Element>
void for_each_reference(E& e, F&& fn) {
  auto one = [&](RefField f, auto& gid) {
    if (!gid.empty()) fn(f, gid);
  };
  auto many = [&](RefField f, auto& list) {
    for (auto& gid : list) one(f, gid);
  };
  one(RefField::owner, e.owner);
  one(RefField::cited_element, e.cited_element);
  one(RefField::abstract_form, e.abstract_form);
  many(RefField::meta_claim, e.meta_claims);
  many(RefField::source, e.sources);
  many(RefField::target, e.targets);
  one(RefField::reasoning, e.reasoning);
  one(RefField::referenced_artifact, e.referenced_artifact);
  many(RefField::participant_package, e.participant_packages);
  many(RefField::member, e.members);
  one(RefField::origin, e.origin);
  for (auto& [label, gid] : e.element_refs) one(RefField::element_ref, gid);
  one(RefField::module_ref, e.module_ref);

  if constexpr (std::is_const_v<E>) {
    if (e.name && !e.name->expression_ref.empty()) fn(RefField::expression_ref, e.name->expression_ref);
    detail::visit_expression_refs_const(e.description, fn);
    detail::visit_expression_refs_const(e.content, fn);
    for (const auto& t : e.implementation_constraints) detail::visit_expression_refs_const(t, fn);
    for (const auto& t : e.notes) detail::visit_expression_refs_const(t, fn);
    for (const auto& t : e.tagged_values) detail::visit_expression_refs_const(t.value, fn);
  } else {
    if (e.name && !e.name->expression_ref.empty()) fn(RefField::expression_ref, e.name->expression_ref);
    detail::visit_expression_refs(e.description, fn);
    detail::visit_expression_refs(e.content, fn);
    for (auto& t : e.implementation_constraints) detail::visit_expression_refs(t, fn);
    for (auto& t : e.notes) detail::visit_expression_refs(t, fn);
    for (auto& t : e.tagged_values) detail::visit_expression_refs(t.value, fn);
  }
}

/// Calls fn(std::string&) / fn(const std::string&) on every free-text field
/// that may carry pattern roles: name, description, content, statement,
/// notes, value.
template <class E, class F>
  requires std::is_same_v<std::remove_const_t<E>, Element>
void for_each_text(E& e, F&& fn) {
  if (e.name) fn(e.name->content);
  auto multi = [&](auto& text) {
    if constexpr (std::is_const_v<E>) {
      for (const auto& v : text.values()) fn(v.content);
    } else {
      for (auto& v : text.mutable_values()) fn(v.content);
    }
  };
  multi(e.description);
  multi(e.content);
  for (auto& n : e.notes) multi(n);
  if (!e.statement.empty()) fn(e.statement);
  if (!e.value.empty()) fn(e.value);
}

}  // namespace acm
