#include "acm/instantiate.hpp"

#include <algorithm>
#include <deque>

#include "acm/terminology.hpp"

namespace acm {

namespace {

bool gsn_connector(Kind k) { return k == Kind::SupportedBy || k == Kind::InContextOf; }

bool sacm_relationship(Kind k) { return is_relationship(k) && !gsn_connector(k); }

// Key under which the table describes a Choice connector: its gid first, then its group.
const ConnectorChoice* choice_entry(const BindingTable& table, const Element& c) {
  if (auto it = table.connectors.find(c.gid); it != table.connectors.end()) return &it->second;
  if (c.choice && !c.choice->group.empty()) {
    if (auto it = table.connectors.find(c.choice->group); it != table.connectors.end()) return &it->second;
  }
  return nullptr;
}

std::string choice_group(const Element& c) {
  return c.choice && !c.choice->group.empty() ? c.choice->group : c.gid;
}

// A replica level. The top scope owns every element; a replica scope owns the
// subtree it copies.
struct Scope {
  const Scope* parent = nullptr;
  std::set<Gid> members;
  std::string suffix;
  int index = 0;
  int count = 0;
  const Element* connector = nullptr;
};

class Instantiator {
 public:
  Instantiator(const Model& pattern, const BindingTable& table)
      : pattern_(pattern), table_(table), result_{Model(pattern.notation()), {}} {}

  InstantiationResult run() {
    for (const auto& role : extract_roles(pattern_)) {
      if (table_.find(role) == nullptr) {
        throw Error(ErrorCode::MissingBinding, "no binding for role '" + role + "'", {role});
      }
    }
    check_connectors();

    Scope top;
    std::vector<const Element*> region;
    for (const auto& e : pattern_.elements()) {
      if (!removed_.contains(e.gid)) region.push_back(&e);
    }
    emit_region(region, top);
    return std::move(result_);
  }

 private:
  void check_connectors() {
    std::map<std::string, std::vector<const Element*>> groups;
    for (const auto& c : pattern_.elements()) {
      if (!c.decorated()) continue;
      if (c.many) {
        auto it = table_.connectors.find(c.gid);
        if (it == table_.connectors.end() || !it->second.count) {
          throw Error(ErrorCode::MissingBinding, "no count for Many connector '" + c.gid + "'", {c.gid});
        }
        counts_[c.gid] = *it->second.count;
      }
      if (c.is_optional) {
        auto it = table_.connectors.find(c.gid);
        if (it == table_.connectors.end() || !it->second.chosen) {
          throw Error(ErrorCode::MissingBinding, "no choice for optional connector '" + c.gid + "'", {c.gid});
        }
        if (!*it->second.chosen) remove_with_subtree(c);
      }
      if (c.choice) groups[choice_group(c)].push_back(&c);
    }
    for (const auto& [group, members] : groups) {
      const ConnectorChoice* entry = nullptr;
      for (const Element* c : members) {
        if (const ConnectorChoice* e = choice_entry(table_, *c); e != nullptr && e->subset) {
          entry = e;
          break;
        }
      }
      if (entry == nullptr) {
        throw Error(ErrorCode::MissingBinding, "no subset for choice group '" + group + "'", {group});
      }
      const auto& subset = *entry->subset;
      for (const auto& gid : subset) {
        if (std::ranges::none_of(members, [&](const Element* c) { return c->gid == gid; })) {
          throw Error(ErrorCode::ChoiceOutOfRange,
                      "'" + gid + "' is not an alternative of choice group '" + group + "'", {group, gid});
        }
      }
      const std::set<Gid> chosen(subset.begin(), subset.end());
      const auto& decorator = *members.front()->choice;
      const int n = static_cast<int>(chosen.size());
      if (n < decorator.min || n > decorator.max) {
        throw Error(ErrorCode::ChoiceOutOfRange,
                    "choice group '" + group + "' takes " + std::to_string(decorator.min) + ".." +
                        std::to_string(decorator.max) + " alternatives, got " + std::to_string(n),
                    {group});
      }
      for (const Element* c : members) {
        if (!chosen.contains(c->gid)) remove_with_subtree(*c);
      }
    }
  }

  void remove_with_subtree(const Element& c) {
    removed_.insert(c.gid);
    for (const auto& g : subtree(c)) removed_.insert(g);
  }

  // Everything hanging from the supporting end of `c`, plus abstract
  // terminology used only there.
  std::set<Gid> subtree(const Element& c) {
    if (auto it = subtree_cache_.find(c.gid); it != subtree_cache_.end()) return it->second;
    const bool gsn = gsn_connector(c.kind);
    const auto& start = gsn ? c.targets : c.sources;
    const auto& stop = gsn ? c.sources : c.targets;
    std::set<Gid> out;
    std::deque<Gid> queue(start.begin(), start.end());
    auto push = [&](const Gid& g) {
      if (std::ranges::find(stop, g) == stop.end() && !out.contains(g)) queue.push_back(g);
    };
    while (!queue.empty()) {
      Gid x = queue.front();
      queue.pop_front();
      if (!out.insert(x).second) continue;
      for (const auto& r : pattern_.elements()) {
        if (r.gid == c.gid || out.contains(r.gid)) continue;
        if (gsn_connector(r.kind) && std::ranges::find(r.sources, x) != r.sources.end()) {
          out.insert(r.gid);
          for (const auto& t : r.targets) push(t);
        } else if (sacm_relationship(r.kind) && std::ranges::find(r.targets, x) != r.targets.end()) {
          out.insert(r.gid);
          for (const auto& s : r.sources) push(s);
          if (!r.reasoning.empty()) push(r.reasoning);
        }
      }
    }
    add_private_terminology(out);
    subtree_cache_[c.gid] = out;
    return out;
  }

  void add_private_terminology(std::set<Gid>& region) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<Gid> candidates;
      for (const auto& g : region) {
        const Element* e = pattern_.find(g);
        if (e == nullptr) continue;
        for_each_reference(*e, [&](RefField field, const Gid& ref) {
          if (field != RefField::expression_ref && field != RefField::element_ref) return;
          const Element* t = pattern_.find(ref);
          if (t != nullptr && t->is_abstract && t->is(Kind::ExpressionElement) && !region.contains(ref)) {
            candidates.insert(ref);
          }
        });
      }
      for (const auto& cand : candidates) {
        const bool private_use = std::ranges::all_of(pattern_.elements(), [&](const Element& e) {
          if (region.contains(e.gid) || e.gid == cand) return true;
          bool uses = false;
          for_each_reference(e, [&](RefField field, const Gid& ref) {
            if ((field == RefField::expression_ref || field == RefField::element_ref) && ref == cand) uses = true;
          });
          return !uses;
        });
        if (private_use) {
          region.insert(cand);
          grew = true;
        }
      }
    }
  }

  static bool in_chain(const Scope& scope, const Element* connector) {
    for (const Scope* s = &scope; s != nullptr; s = s->parent) {
      if (s->connector == connector) return true;
    }
    return false;
  }

  void emit_region(const std::vector<const Element*>& region, const Scope& scope) {
    std::set<Gid> in_region;
    for (const Element* e : region) in_region.insert(e->gid);

    std::vector<std::pair<const Element*, std::set<Gid>>> many;
    for (const Element* e : region) {
      if (!e->many || in_chain(scope, e)) continue;
      std::set<Gid> copied;
      for (const auto& g : subtree(*e)) {
        if (in_region.contains(g)) copied.insert(g);
      }
      if (gsn_connector(e->kind)) copied.insert(e->gid);
      many.emplace_back(e, std::move(copied));
    }
    // Only the outermost expansions are handled at this level.
    std::erase_if(many, [&](const auto& m) {
      return std::ranges::any_of(many, [&](const auto& other) {
        return other.first != m.first && other.second.contains(m.first->gid);
      });
    });

    std::set<Gid> replicated;
    for (const auto& [c, copied] : many) replicated.insert(copied.begin(), copied.end());
    for (const Element* e : region) {
      if (!replicated.contains(e->gid)) emit_element(*e, scope, many);
    }
    for (const auto& [c, copied] : many) {
      const int n = counts_.at(c->gid);
      std::vector<const Element*> sub;
      for (const Element* e : region) {
        if (copied.contains(e->gid)) sub.push_back(e);
      }
      for (int i = 0; i < n; ++i) {
        Scope child;
        child.parent = &scope;
        child.members = copied;
        child.suffix = scope.suffix + "." + std::to_string(i + 1);
        child.index = i;
        child.count = n;
        child.connector = c;
        emit_region(sub, child);
      }
    }
  }

  Gid gid_in(const Gid& gid, const Scope& scope) const {
    if (!scope.suffix.empty()) return gid + scope.suffix;
    const Element* e = pattern_.find(gid);
    return e != nullptr && e->is_abstract ? gid + ".i" : gid;
  }

  Gid resolve(const Gid& gid, const Scope& scope) const {
    for (const Scope* s = &scope; s != nullptr; s = s->parent) {
      if (s->parent == nullptr || s->members.contains(gid)) return gid_in(gid, *s);
    }
    return gid;
  }

  std::optional<std::string> lookup(const std::string& role, const Scope& scope) const {
    const RoleBinding* b = table_.find(role);
    if (b == nullptr) throw Error(ErrorCode::MissingBinding, "no binding for role '" + role + "'", {role});
    const auto size = static_cast<int>(b->values.size());
    if (size == 1) return b->values.front();
    for (const Scope* s = &scope; s != nullptr && s->parent != nullptr; s = s->parent) {
      if (s->count == size) return b->values[static_cast<std::size_t>(s->index)];
    }
    if (scope.parent != nullptr) {
      throw Error(ErrorCode::CountMismatch,
                  "role '" + role + "' has " + std::to_string(size) + " values but connector '" +
                      scope.connector->gid + "' is expanded " + std::to_string(scope.count) + " times",
                  {scope.connector->gid, std::to_string(scope.count), std::to_string(size)});
    }
    std::string joined;
    for (const auto& v : b->values) joined += (joined.empty() ? "" : ", ") + v;
    return joined;
  }

  void emit_element(const Element& src, const Scope& scope,
                    const std::vector<std::pair<const Element*, std::set<Gid>>>& many) {
    Element e = src;
    e.gid = gid_in(src.gid, scope);

    // A SACM relationship carrying Many gathers every replica of its sources.
    const std::set<Gid>* expanded = nullptr;
    int n = 0;
    for (const auto& [c, copied] : many) {
      if (c == &src) {
        expanded = &copied;
        n = counts_.at(c->gid);
      }
    }
    if (expanded != nullptr) {
      std::vector<Gid> sources;
      for (const auto& s : src.sources) {
        if (!expanded->contains(s)) {
          sources.push_back(s);
          continue;
        }
        for (int i = 0; i < n; ++i) sources.push_back(s + scope.suffix + "." + std::to_string(i + 1));
      }
      e.sources.clear();
      for (const auto& s : sources) {
        e.sources.push_back(pattern_.contains(s) ? resolve(s, scope) : s);
      }
    } else {
      std::erase_if(e.sources, [&](const Gid& g) { return removed_.contains(g); });
      for (auto& s : e.sources) s = resolve(s, scope);
    }
    std::erase_if(e.targets, [&](const Gid& g) { return removed_.contains(g); });
    for (auto& t : e.targets) t = resolve(t, scope);
    if (is_relationship(src.kind) && (e.sources.empty() || e.targets.empty())) return;

    for_each_reference(e, [&](RefField field, Gid& gid) {
      if (field == RefField::abstract_form || field == RefField::source || field == RefField::target) return;
      gid = resolve(gid, scope);
    });
    e.many.reset();
    e.is_optional = false;
    e.choice.reset();

    std::string rule = scope.parent == nullptr ? "copy" : "replicate#" + std::to_string(scope.index + 1);
    if (src.is_abstract) {
      auto sub = [&](const std::string& label) { return lookup(label, scope); };
      for_each_text(e, [&](std::string& text) { text = substitute_placeholders(text, sub, src.gid); });
      if (src.kind == Kind::Term && table_.find(src.value) != nullptr) e.value = *lookup(src.value, scope);
      e.is_abstract = false;
      e.abstract_form = src.gid;
      e.implementation_constraints.clear();
      if (scope.parent == nullptr) rule = "instantiate";
    }
    result_.trace.push_back(TraceLink{src.gid, e.gid, rule});
    result_.model.add(std::move(e));
  }

  const Model& pattern_;
  const BindingTable& table_;
  InstantiationResult result_;
  std::set<Gid> removed_;
  std::map<Gid, int> counts_;
  std::map<Gid, std::set<Gid>> subtree_cache_;
};

}  // namespace

const RoleBinding* BindingTable::find(std::string_view role) const {
  for (const auto& e : entries) {
    if (e.role == role) return &e;
  }
  return nullptr;
}

std::set<std::string> extract_roles(const Model& pattern) {
  std::set<std::string> roles;
  for (const auto& e : pattern.elements()) {
    if (!e.is_abstract) continue;
    for_each_text(e, [&](const std::string& text) {
      roles.merge(placeholder_labels(text, e.gid));
    });
    if (e.kind == Kind::Term && !e.value.empty() && e.value.find('{') == std::string::npos) {
      roles.insert(e.value);
    }
  }
  return roles;
}

InstantiationResult instantiate(const Model& pattern, const BindingTable& table) {
  return Instantiator(pattern, table).run();
}

std::vector<Diagnostic> verify_instantiation(const Model& concrete, const Model& pattern) {
  std::vector<Diagnostic> out;
  for (const auto& e : concrete.elements()) {
    if (!e.abstract_form.empty() && !pattern.contains(e.abstract_form)) {
      out.push_back(make_diagnostic("INST-E3", {e.gid},
                                    "abstract_form '" + e.abstract_form + "' is not in the pattern"));
    }
    if (e.is_abstract) {
      out.push_back(make_diagnostic("INST-E2", {e.gid}, "element is still abstract"));
    }
    std::set<std::string> residual;
    bool broken = false;
    for_each_text(e, [&](const std::string& text) {
      try {
        residual.merge(placeholder_labels(text));
      } catch (const Error&) {
        broken = true;
      }
    });
    if (broken) out.push_back(make_diagnostic("INST-E1", {e.gid}, "unbalanced braces left in text"));
    for (const auto& r : residual) {
      out.push_back(make_diagnostic("INST-E1", {e.gid}, "residual placeholder {" + r + "}"));
    }
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace acm
