#include "acm/validate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <tuple>

#include "acm/argumentation.hpp"
#include "acm/gsn.hpp"

namespace acm {

namespace {

constexpr std::array kCatalog = {
    RuleInfo{"EVAL-W1", Severity::warning, "evidence missing from the evidence map, treated as invalid"},
    RuleInfo{"GSN-E1", Severity::error, "SupportedBy between kinds that may not be connected"},
    RuleInfo{"GSN-E2", Severity::error, "InContextOf between kinds that may not be connected"},
    RuleInfo{"GSN-E3", Severity::error, "undeveloped element has a supporting connector"},
    RuleInfo{"INST-E1", Severity::error, "residual role placeholder in an instantiated element"},
    RuleInfo{"INST-E2", Severity::error, "instantiated document still holds an abstract element"},
    RuleInfo{"INST-E3", Severity::error, "abstract_form does not resolve into the pattern"},
    RuleInfo{"SACM-E1", Severity::error, "reference or relationship endpoint of the wrong kind"},
    RuleInfo{"SACM-E2", Severity::error, "reference to a gid absent from the document"},
    RuleInfo{"SACM-W3", Severity::warning, "citation flag, cited element and asCited disagree"},
    RuleInfo{"SACM-W4", Severity::warning, "citation cycle"},
    RuleInfo{"SACM-W5", Severity::warning, "cycle in the inference graph"},
    RuleInfo{"SACM-W6", Severity::warning, "inference with more than one target"},
    RuleInfo{"SACM-W7", Severity::warning, "artifact asset related to itself"},
    RuleInfo{"SACM-W8", Severity::warning, "Term with both external_reference and origin"},
    RuleInfo{"SACM-W9", Severity::warning, "expression_ref does not name an Expression"},
    RuleInfo{"SACM-W10", Severity::warning, "defeated without a counter relationship targeting it"},
    RuleInfo{"SACM-W11", Severity::warning, "interface package holds a non-citation element"},
    RuleInfo{"SACM-W12", Severity::warning, "binding with fewer than two participant packages"},
    RuleInfo{"TRANS-W1", Severity::warning, "Argument without sub-claims yields a reasoning only"},
};

std::string kind_name(const Element& e) { return std::string(to_string(e.kind)); }

std::string quoted(std::string_view gid) { return "'" + std::string(gid) + "'"; }

// Graph edges of the inference relation, bottom-up: source -> target.
bool inference_edge(Kind k) { return is_a(k, Kind::AssertedInference); }

class Checker {
 public:
  explicit Checker(const Model& m) : model_(m) {}

  std::vector<Diagnostic> run() {
    for (const auto& e : model_.elements()) {
      gsn_rules(e);
      kind_rules(e);
      dangling(e);
      citation_discipline(e);
      local_warnings(e);
    }
    citation_cycles();
    inference_cycles();
    sort_diagnostics(out_);
    return std::move(out_);
  }

 private:
  void emit(std::string_view rule, std::vector<Gid> gids, std::string message) {
    out_.push_back(make_diagnostic(rule, std::move(gids), std::move(message)));
  }

  void gsn_rules(const Element& e) {
    if (e.kind == Kind::SupportedBy || e.kind == Kind::InContextOf) {
      if (auto v = gsn_connector_violation(model_, e)) {
        emit(e.kind == Kind::SupportedBy ? "GSN-E1" : "GSN-E2", {e.gid}, *v);
      }
    }
    if (e.kind == Kind::SupportedBy && e.sources.size() == 1) {
      const Element* from = model_.find(e.sources.front());
      if (from != nullptr && from->undeveloped) {
        emit("GSN-E3", {from->gid, e.gid},
             kind_name(*from) + " " + quoted(from->gid) + " is undeveloped but supported by " +
                 quoted(e.gid));
      }
    }
  }

  // A resolving reference whose target has the wrong kind.
  void kind_rules(const Element& e) {
    if (auto v = endpoint_violation(model_, e)) emit("SACM-E1", {e.gid}, *v);

    auto wrong = [&](std::string_view field, const Gid& gid, auto&& ok, std::string_view expected) {
      const Element* t = model_.find(gid);
      if (t != nullptr && !ok(*t)) {
        emit("SACM-E1", {e.gid},
             std::string(field) + " " + quoted(gid) + " is a " + kind_name(*t) + ", expected " +
                 std::string(expected));
      }
    };
    if (!e.cited_element.empty()) {
      const Element* t = model_.find(e.cited_element);
      if (t != nullptr && !citation_compatible(e.kind, t->kind)) {
        emit("SACM-E1", {e.gid},
             kind_name(e) + " cannot cite " + kind_name(*t) + " " + quoted(t->gid));
      }
    }
    for (const auto& m : e.meta_claims) {
      wrong("meta_claim", m, [](const Element& t) { return t.is(Kind::Claim); }, "Claim");
    }
    for (const auto& p : e.participant_packages) {
      wrong("participant_package", p, [](const Element& t) { return is_package(t.kind); }, "a package");
    }
    if (!e.module_ref.empty()) {
      wrong("module_ref", e.module_ref, [](const Element& t) { return is_package(t.kind); }, "a package");
    }
    for (const auto& [label, gid] : e.element_refs) {
      wrong("element_ref", gid, [](const Element& t) { return t.is(Kind::ExpressionElement); },
            "Term or Expression");
    }
    if (!e.members.empty()) {
      Kind base = Kind::ArtifactElement;
      std::string_view expected = "ArtifactElement";
      if (e.kind == Kind::TerminologyGroup) {
        base = Kind::TerminologyAsset;
        expected = "TerminologyAsset";
      } else if (e.kind == Kind::Category) {
        base = Kind::ExpressionElement;
        expected = "Term or Expression";
      }
      for (const auto& m : e.members) {
        wrong("member", m, [base](const Element& t) { return t.is(base); }, expected);
      }
    }
    if (!e.abstract_form.empty()) {
      const Element* t = model_.find(e.abstract_form);
      if (t != nullptr && !t->is_abstract) {
        emit("SACM-E1", {e.gid}, "abstract_form " + quoted(t->gid) + " is not abstract");
      }
    }
  }

  void dangling(const Element& e) {
    std::set<std::pair<std::string, Gid>> seen;
    for_each_reference(e, [&](RefField field, const Gid& gid) {
      if (field == RefField::abstract_form || field == RefField::expression_ref) return;
      if (model_.contains(gid)) return;
      if (!seen.emplace(std::string(to_string(field)), gid).second) return;
      emit("SACM-E2", {e.gid}, std::string(to_string(field)) + " " + quoted(gid) + " does not resolve");
    });
  }

  void citation_discipline(const Element& e) {
    if (e.is_citation && e.cited_element.empty()) {
      emit("SACM-W3", {e.gid}, "is_citation is set but cited_element is empty");
    }
    if (!e.is_citation && !e.cited_element.empty()) {
      emit("SACM-W3", {e.gid}, "cited_element is set but is_citation is not");
    }
    if (e.is(Kind::Claim)) {
      if (e.is_citation && e.declaration != Declaration::asCited) {
        emit("SACM-W3", {e.gid}, "citing Claim is not declared asCited");
      }
      if (!e.is_citation && e.declaration == Declaration::asCited) {
        emit("SACM-W3", {e.gid}, "asCited Claim is not a citation");
      }
    }
    if (e.kind == Kind::AwayGoal && !e.is_citation) {
      emit("SACM-W3", {e.gid}, "AwayGoal does not cite a Goal");
    }
  }

  void local_warnings(const Element& e) {
    if (inference_edge(e.kind) && e.kind != Kind::SupportedBy && e.targets.size() > 1) {
      emit("SACM-W6", {e.gid}, kind_name(e) + " has " + std::to_string(e.targets.size()) + " targets");
    }
    if (e.kind == Kind::ArtifactAssetRelationship) {
      for (const auto& s : e.sources) {
        if (std::ranges::find(e.targets, s) != e.targets.end()) {
          emit("SACM-W7", {e.gid}, quoted(s) + " is both source and target");
          break;
        }
      }
    }
    if (e.kind == Kind::Term && !e.external_reference.empty() && !e.origin.empty()) {
      emit("SACM-W8", {e.gid}, "Term has both external_reference and origin");
    }
    {
      std::set<Gid> seen;
      for_each_reference(e, [&](RefField field, const Gid& gid) {
        if (field != RefField::expression_ref || !seen.insert(gid).second) return;
        const Element* t = model_.find(gid);
        if (t == nullptr) {
          emit("SACM-W9", {e.gid}, "expression_ref " + quoted(gid) + " does not resolve");
        } else if (t->kind != Kind::Expression) {
          emit("SACM-W9", {e.gid}, "expression_ref " + quoted(gid) + " is a " + kind_name(*t));
        }
      });
    }
    if (e.is(Kind::Assertion) && e.declaration == Declaration::defeated && !countered(e.gid)) {
      emit("SACM-W10", {e.gid}, "declared defeated but no counter relationship targets it");
    }
    if (!e.owner.empty() && !e.is_citation) {
      const Element* o = model_.find(e.owner);
      if (o != nullptr && is_interface(o->kind)) {
        emit("SACM-W11", {e.gid},
             kind_name(e) + " inside interface " + quoted(o->gid) + " is not a citation");
      }
    }
    if (is_binding(e.kind)) {
      std::set<Gid> distinct(e.participant_packages.begin(), e.participant_packages.end());
      if (distinct.size() < 2) {
        emit("SACM-W12", {e.gid},
             "binding has " + std::to_string(distinct.size()) + " distinct participant package(s)");
      }
    }
  }

  bool countered(const Gid& gid) const {
    return std::ranges::any_of(model_.elements(), [&](const Element& r) {
      return r.is(Kind::AssertedRelationship) && r.is_counter &&
             std::ranges::find(r.targets, gid) != r.targets.end();
    });
  }

  void citation_cycles() {
    std::set<Gid> reported;
    for (const auto& e : model_.elements()) {
      if (!e.is_citation || e.cited_element.empty() || reported.contains(e.gid)) continue;
      std::vector<Gid> path;
      std::set<Gid> on_path;
      const Element* cur = &e;
      while (cur != nullptr && cur->is_citation && !cur->cited_element.empty()) {
        if (on_path.contains(cur->gid)) {
          auto start = std::ranges::find(path, cur->gid);
          std::vector<Gid> cycle(start, path.end());
          bool fresh = std::ranges::none_of(cycle, [&](const Gid& g) { return reported.contains(g); });
          if (fresh) {
            std::ranges::rotate(cycle, std::ranges::min_element(cycle));
            reported.insert(cycle.begin(), cycle.end());
            std::string text;
            for (const auto& g : cycle) text += g + " -> ";
            text += cycle.front();
            emit("SACM-W4", cycle, "citation cycle " + text);
          }
          break;
        }
        on_path.insert(cur->gid);
        path.push_back(cur->gid);
        cur = model_.find(cur->cited_element);
      }
    }
  }

  // Tarjan over source -> target edges of every inference-like relationship.
  void inference_cycles() {
    std::map<Gid, std::set<Gid>> graph;
    for (const auto& r : model_.elements()) {
      // GSN SupportedBy points top-down; direction is irrelevant for cycles.
      if (!inference_edge(r.kind)) continue;
      for (const auto& s : r.sources) {
        for (const auto& t : r.targets) {
          if (model_.contains(s) && model_.contains(t)) graph[s].insert(t);
        }
      }
    }
    std::map<Gid, int> index;
    std::map<Gid, int> low;
    std::set<Gid> on_stack;
    std::vector<Gid> stack;
    int counter = 0;
    std::function<void(const Gid&)> strong = [&](const Gid& v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack.insert(v);
      for (const auto& w : graph[v]) {
        if (!index.contains(w)) {
          strong(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.contains(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] != index[v]) return;
      std::vector<Gid> component;
      Gid w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
      } while (w != v);
      const bool self_loop = component.size() == 1 && graph[v].contains(v);
      if (component.size() > 1 || self_loop) {
        std::ranges::sort(component);
        std::string text;
        for (const auto& g : component) text += (text.empty() ? "" : ", ") + g;
        emit("SACM-W5", component, "inference cycle through " + text);
      }
    };
    std::vector<Gid> nodes;
    for (const auto& [v, _] : graph) nodes.push_back(v);
    for (const auto& v : nodes) {
      if (!index.contains(v)) strong(v);
    }
  }

  const Model& model_;
  std::vector<Diagnostic> out_;
};

// Status propagation with memoisation; nodes being visited count as not holding.
class Evaluator {
 public:
  Evaluator(const Model& m, const EvidenceStatus& evidence) : model_(m), evidence_(evidence) {
    for (const auto& r : model_.elements()) {
      if (r.is(Kind::AssertedInference) || r.is(Kind::AssertedEvidence)) {
        for (const auto& t : r.targets) incoming_[t].push_back(&r);
      }
    }
  }

  ClaimStatus claim(const Element& c) {
    if (auto it = status_.find(c.gid); it != status_.end()) return it->second;
    if (!visiting_.insert(c.gid).second) return ClaimStatus::unsupported;
    ClaimStatus s = base_status(c);
    if (s != ClaimStatus::defeated && defeated_by_counter(c.gid)) s = ClaimStatus::defeated;
    visiting_.erase(c.gid);
    status_[c.gid] = s;
    return s;
  }

  std::vector<Diagnostic> take_warnings() {
    std::vector<Diagnostic> out;
    for (const auto& g : unknown_) {
      out.push_back(make_diagnostic("EVAL-W1", {g}, "no evidence status for " + quoted(g) + ", treated as invalid"));
    }
    return out;
  }

 private:
  ClaimStatus base_status(const Element& c) {
    if (c.is_citation) {
      const auto chain = resolve_citation(model_, c.gid);
      const Element& terminal = model_.at(chain.terminal);
      if (terminal.is(Kind::Claim)) return claim(terminal);
      return ClaimStatus::unsupported;
    }
    switch (c.declaration) {
      case Declaration::axiomatic:
        return ClaimStatus::axiomatic;
      case Declaration::assumed:
        return ClaimStatus::assumed;
      case Declaration::needsSupport:
      case Declaration::asCited:
        return ClaimStatus::unsupported;
      case Declaration::defeated:
        return ClaimStatus::defeated;
      case Declaration::asserted:
        break;
    }
    bool any = false;
    for (const Element* r : edges_into(c.gid)) {
      if (r->is_counter) continue;
      any = true;
      if (!edge_holds(*r)) return ClaimStatus::unsupported;
    }
    return any ? ClaimStatus::supported : ClaimStatus::unsupported;
  }

  bool defeated_by_counter(const Gid& gid) {
    for (const Element* r : edges_into(gid)) {
      if (r->is_counter && edge_holds(*r)) return true;
    }
    return false;
  }

  std::vector<const Element*> edges_into(const Gid& gid) const {
    auto it = incoming_.find(gid);
    return it == incoming_.end() ? std::vector<const Element*>{} : it->second;
  }

  bool edge_holds(const Element& r) {
    if (auto it = edge_memo_.find(r.gid); it != edge_memo_.end()) return it->second;
    if (!visiting_.insert(r.gid).second) return false;
    bool ok = r.declaration != Declaration::defeated && r.declaration != Declaration::needsSupport &&
              !defeated_by_counter(r.gid);
    for (const auto& s : r.sources) {
      if (!ok) break;
      ok = source_holds(s);
    }
    visiting_.erase(r.gid);
    edge_memo_[r.gid] = ok;
    return ok;
  }

  bool source_holds(const Gid& gid) {
    const Element* e = model_.find(gid);
    if (e == nullptr) return false;
    if (e->is(Kind::Claim)) return holds(claim(*e));
    if (e->is(Kind::ArtifactReference)) {
      auto it = evidence_.find(gid);
      if (it == evidence_.end()) {
        unknown_.insert(gid);
        return false;
      }
      return it->second;
    }
    if (e->is(Kind::AssertedRelationship)) return edge_holds(*e);
    return false;
  }

  const Model& model_;
  const EvidenceStatus& evidence_;
  std::map<Gid, std::vector<const Element*>> incoming_;
  std::map<Gid, ClaimStatus> status_;
  std::map<Gid, bool> edge_memo_;
  std::set<Gid> visiting_;
  std::set<Gid> unknown_;
};

}  // namespace

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::supported:
      return "supported";
    case ClaimStatus::unsupported:
      return "unsupported";
    case ClaimStatus::assumed:
      return "assumed";
    case ClaimStatus::axiomatic:
      return "axiomatic";
    case ClaimStatus::defeated:
      return "defeated";
  }
  return "unsupported";
}

bool holds(ClaimStatus status) {
  return status == ClaimStatus::supported || status == ClaimStatus::assumed ||
         status == ClaimStatus::axiomatic;
}

std::span<const RuleInfo> rule_catalog() { return kCatalog; }

const RuleInfo* find_rule(std::string_view id) {
  for (const auto& r : kCatalog) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

Diagnostic make_diagnostic(std::string_view rule_id, std::vector<Gid> gids, std::string message) {
  const RuleInfo* rule = find_rule(rule_id);
  if (rule == nullptr) throw Error(ErrorCode::InvalidArgument, "unknown rule id " + std::string(rule_id));
  return Diagnostic{std::string(rule_id), rule->severity, std::move(gids), std::move(message)};
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  auto key = [](const Diagnostic& d) {
    static const Gid none;
    return std::tie(d.rule_id, d.element_gids.empty() ? none : d.element_gids.front(), d.message);
  };
  std::ranges::sort(diagnostics, [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
  diagnostics.erase(std::unique(diagnostics.begin(), diagnostics.end()), diagnostics.end());
}

std::vector<Diagnostic> check(const Model& model) { return Checker(model).run(); }

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::ranges::any_of(diagnostics, [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string gids;
  for (const auto& g : d.element_gids) gids += (gids.empty() ? "" : ",") + g;
  if (gids.empty()) gids = "-";
  return std::string(to_string(d.severity)) + " " + d.rule_id + " " + gids + " " + d.message;
}

Evaluation evaluate(const Model& model, const EvidenceStatus& evidence) {
  if (model.notation() != Notation::sacm) {
    throw Error(ErrorCode::PreconditionFailed,
                "evaluate needs a SACM document, got " + std::string(to_string(model.notation())));
  }
  const auto diagnostics = check(model);
  if (has_errors(diagnostics)) {
    std::vector<Gid> subjects;
    std::vector<std::string> details;
    for (const auto& d : diagnostics) {
      if (d.severity != Severity::error) continue;
      if (!d.element_gids.empty()) subjects.push_back(d.element_gids.front());
      details.push_back(format_diagnostic(d));
    }
    throw Error(ErrorCode::PreconditionFailed, "document has validation errors", subjects, details);
  }
  Evaluator ev(model, evidence);
  Evaluation result;
  for (const auto& e : model.elements()) {
    if (e.is(Kind::Claim)) result.statuses[e.gid] = ev.claim(e);
  }
  result.warnings = ev.take_warnings();
  return result;
}

std::vector<Gid> root_claims(const Model& model) {
  std::set<std::string_view> used;
  for (const auto& e : model.elements()) {
    if (e.is(Kind::AssertedRelationship) || e.kind == Kind::ArtifactAssetRelationship) {
      for (const auto& s : e.sources) used.insert(s);
    }
    if (e.is_citation) used.insert(e.cited_element);
    for (const auto& m : e.meta_claims) used.insert(m);
  }
  std::vector<Gid> out;
  for (const auto& e : model.elements()) {
    if (e.is(Kind::Claim) && !used.contains(e.gid)) out.push_back(e.gid);
  }
  return out;
}

}  // namespace acm
