#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace acm {

/// Text tagged with its language ("en", "de", or a computer language such as
/// "ocl"). When `expression_ref` is set the entry is an ExpressionLangString
/// and names the Expression it renders.
struct LangString {
  std::string lang;
  std::string content;
  std::string expression_ref;

  [[nodiscard]] bool is_expression() const { return !expression_ref.empty(); }
  friend bool operator==(const LangString&, const LangString&) = default;
};

/// The same meaning in several languages; at most one entry per tag.
class MultiLangString {
 public:
  MultiLangString() = default;
  MultiLangString(std::vector<LangString> values);  // NOLINT(google-explicit-constructor)
  MultiLangString(std::string_view lang, std::string_view content);

  /// Appends an entry; throws InvalidArgument on an empty or repeated tag.
  void add(LangString value);
  /// Replaces the entry for value.lang, or appends it.
  void set(LangString value);

  [[nodiscard]] const std::vector<LangString>& values() const { return values_; }
  std::vector<LangString>& mutable_values() { return values_; }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] const LangString* find(std::string_view lang) const;

  friend bool operator==(const MultiLangString&, const MultiLangString&) = default;

 private:
  std::vector<LangString> values_;
};

/// Exact tag match, else the first entry in document order. Throws EmptyString.
std::string localize(const MultiLangString& text, std::string_view lang);

}  // namespace acm
