#include "acm/terminology.hpp"

namespace acm {

namespace {

[[noreturn]] void unbalanced(std::string_view text, std::string_view owner, std::string_view why) {
  std::vector<std::string> subjects;
  if (!owner.empty()) subjects.emplace_back(owner);
  throw Error(ErrorCode::UnbalancedBraces, std::string(why) + " in \"" + std::string(text) + "\"",
              std::move(subjects));
}

std::string escape_literal(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '{' || c == '}') out.push_back(c);
    out.push_back(c);
  }
  return out;
}

const Element& require_kind(const Model& model, std::string_view gid, Kind kind) {
  const Element& e = model.at(gid);
  if (!e.is(kind)) {
    throw Error(ErrorCode::KindMismatch,
                "'" + e.gid + "' is not a " + std::string(to_string(kind)), {e.gid});
  }
  return e;
}

Element terminology_asset(Model& model, std::string_view package, Kind kind, std::string_view value) {
  if (value.empty()) throw Error(ErrorCode::InvalidArgument, "terminology value must not be empty");
  if (package_family(model.at(package).kind) != Kind::TerminologyPackage) {
    throw Error(ErrorCode::KindMismatch, "'" + std::string(package) + "' is not a TerminologyPackage",
                {std::string(package)});
  }
  Element e;
  e.kind = kind;
  e.owner = std::string(package);
  e.value = std::string(value);
  return e;
}

std::string render(const Model& model, const Element& expr, int depth) {
  if (depth > kMaxExpressionDepth) {
    throw Error(ErrorCode::ExpressionDepth, "expression nesting deeper than " +
                                                std::to_string(kMaxExpressionDepth) + " at '" +
                                                expr.gid + "'",
                {expr.gid});
  }
  std::string out;
  for (const auto& seg : split_placeholders(expr.value, expr.gid)) {
    if (!seg.is_placeholder) {
      out += seg.text;
      continue;
    }
    auto ref = expr.element_refs.find(seg.text);
    if (ref == expr.element_refs.end()) {
      throw Error(ErrorCode::MissingElement,
                  "placeholder {" + seg.text + "} of '" + expr.gid + "' has no element reference",
                  {expr.gid});
    }
    const Element* target = model.find(ref->second);
    if (target == nullptr) {
      throw Error(ErrorCode::MissingElement,
                  "'" + expr.gid + "' references missing element '" + ref->second + "'", {ref->second});
    }
    if (target->kind == Kind::Expression) {
      out += render(model, *target, depth + 1);
    } else if (target->kind == Kind::Term) {
      out += target->is_abstract ? "{" + seg.text + "}" : target->value;
    } else {
      throw Error(ErrorCode::KindMismatch,
                  "'" + target->gid + "' is neither a Term nor an Expression", {target->gid});
    }
  }
  return out;
}

}  // namespace

std::vector<TextSegment> split_placeholders(std::string_view text, std::string_view owner_gid) {
  std::vector<TextSegment> out;
  std::string literal;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool doubled = i + 1 < text.size() && text[i + 1] == c;
    if (c == '}') {
      if (!doubled) unbalanced(text, owner_gid, "unmatched '}'");
      literal.push_back('}');
      ++i;
    } else if (c == '{') {
      if (doubled) {
        literal.push_back('{');
        ++i;
        continue;
      }
      const auto close = text.find('}', i + 1);
      const auto nested = text.find('{', i + 1);
      if (close == std::string_view::npos) unbalanced(text, owner_gid, "unterminated '{'");
      if (nested < close) unbalanced(text, owner_gid, "nested '{'");
      if (close == i + 1) unbalanced(text, owner_gid, "empty placeholder");
      if (!literal.empty()) out.push_back({false, std::exchange(literal, {})});
      out.push_back({true, std::string(text.substr(i + 1, close - i - 1))});
      i = close;
    } else {
      literal.push_back(c);
    }
  }
  if (!literal.empty()) out.push_back({false, std::move(literal)});
  return out;
}

std::set<std::string> placeholder_labels(std::string_view text, std::string_view owner_gid) {
  std::set<std::string> out;
  for (auto& seg : split_placeholders(text, owner_gid)) {
    if (seg.is_placeholder) out.insert(std::move(seg.text));
  }
  return out;
}

std::string substitute_placeholders(
    std::string_view text, const std::function<std::optional<std::string>(const std::string&)>& lookup,
    std::string_view owner_gid) {
  std::string out;
  for (const auto& seg : split_placeholders(text, owner_gid)) {
    if (!seg.is_placeholder) {
      out += escape_literal(seg.text);
    } else if (auto v = lookup(seg.text)) {
      out += escape_literal(*v);
    } else {
      out += "{" + seg.text + "}";
    }
  }
  return out;
}

Gid define_term(Model& model, std::string_view package, std::string_view value,
                std::optional<std::string_view> external_reference,
                std::optional<std::string_view> origin, std::string_view gid) {
  Element e = terminology_asset(model, package, Kind::Term, value);
  e.gid = std::string(gid);
  if (external_reference) e.external_reference = std::string(*external_reference);
  if (origin) {
    model.at(*origin);
    e.origin = std::string(*origin);
  }
  return model.add(std::move(e)).gid;
}

Gid define_expression(Model& model, std::string_view package, std::string_view value,
                      const std::map<std::string, Gid>& element_refs, std::string_view gid) {
  Element e = terminology_asset(model, package, Kind::Expression, value);
  e.gid = std::string(gid);
  for (const auto& [label, ref_gid] : element_refs) {
    if (!model.at(ref_gid).is(Kind::ExpressionElement)) {
      throw Error(ErrorCode::KindMismatch, "'" + ref_gid + "' is neither a Term nor an Expression",
                  {ref_gid});
    }
  }
  e.element_refs = element_refs;
  return model.add(std::move(e)).gid;
}

Gid define_category(Model& model, std::string_view package, std::string_view value,
                    const std::vector<Gid>& members,
                    std::optional<std::string_view> external_reference) {
  Element e = terminology_asset(model, package, Kind::Category, value);
  for (const auto& m : members) require_kind(model, m, Kind::ExpressionElement);
  e.members = members;
  if (external_reference) e.external_reference = std::string(*external_reference);
  return model.add(std::move(e)).gid;
}

std::string render_expression(const Model& model, std::string_view expression) {
  return render(model, require_kind(model, expression, Kind::Expression), 0);
}

}  // namespace acm
