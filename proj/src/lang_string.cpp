#include "acm/lang_string.hpp"

#include "acm/error.hpp"

namespace acm {

MultiLangString::MultiLangString(std::vector<LangString> values) {
  for (auto& v : values) add(std::move(v));
}

MultiLangString::MultiLangString(std::string_view lang, std::string_view content) {
  add(LangString{std::string(lang), std::string(content), {}});
}

void MultiLangString::add(LangString value) {
  if (value.lang.empty()) {
    throw Error(ErrorCode::InvalidArgument, "language tag must not be empty");
  }
  if (find(value.lang) != nullptr) {
    throw Error(ErrorCode::InvalidArgument, "duplicate language tag '" + value.lang + "'");
  }
  values_.push_back(std::move(value));
}

void MultiLangString::set(LangString value) {
  for (auto& v : values_) {
    if (v.lang == value.lang) {
      v = std::move(value);
      return;
    }
  }
  add(std::move(value));
}

const LangString* MultiLangString::find(std::string_view lang) const {
  for (const auto& v : values_) {
    if (v.lang == lang) return &v;
  }
  return nullptr;
}

std::string localize(const MultiLangString& text, std::string_view lang) {
  if (text.empty()) throw Error(ErrorCode::EmptyString, "MultiLangString has no entries");
  if (const auto* hit = text.find(lang)) return hit->content;
  return text.values().front().content;
}

}  // namespace acm
