#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acm/model.hpp"

namespace acm {

// Role placeholders are "{label}"; "{{" and "}}" stand for literal braces.
struct TextSegment {
  bool is_placeholder = false;
  std::string text;  // literal text, or the label without braces
};

/// Splits `text` into literal and placeholder segments.
/// Throws UnbalancedBraces (subjects = {owner_gid} when given).
std::vector<TextSegment> split_placeholders(std::string_view text, std::string_view owner_gid = {});

std::set<std::string> placeholder_labels(std::string_view text, std::string_view owner_gid = {});

/// Rebuilds `text`, replacing each placeholder for which `lookup` returns a
/// value; others stay "{label}". Literal braces are re-escaped.
std::string substitute_placeholders(
    std::string_view text, const std::function<std::optional<std::string>(const std::string&)>& lookup,
    std::string_view owner_gid = {});

inline constexpr int kMaxExpressionDepth = 32;

Gid define_term(Model& model, std::string_view package, std::string_view value,
                std::optional<std::string_view> external_reference = std::nullopt,
                std::optional<std::string_view> origin = std::nullopt,
                std::string_view gid = {});

Gid define_expression(Model& model, std::string_view package, std::string_view value,
                      const std::map<std::string, Gid>& element_refs = {},
                      std::string_view gid = {});

Gid define_category(Model& model, std::string_view package, std::string_view value,
                    const std::vector<Gid>& members,
                    std::optional<std::string_view> external_reference = std::nullopt);

/// Renders an Expression: placeholders bound to concrete Terms take the Term's
/// value, nested Expressions render recursively, abstract references stay
/// "{label}". Throws MissingElement, KindMismatch, ExpressionDepth.
std::string render_expression(const Model& model, std::string_view expression);

}  // namespace acm
