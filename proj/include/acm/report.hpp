#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "acm/model.hpp"

namespace acm {

enum class ReportFormat { md, txt };

struct ReportOptions {
  std::string lang = "en";
  ReportFormat format = ReportFormat::md;
  bool include_diagnostics = false;
  bool include_terminology = true;
};

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Human-readable report: one section per package (nested packages as
/// sub-sections, gid order), with tables of claims, relationships, other
/// argument elements, terminology and artifacts. Each element is listed once,
/// marked by its gid (`gid` in md, [gid] in txt). Text is localized to
/// options.lang where a translation exists.
std::string render(const Model& model, const ReportOptions& options = {});

}  // namespace acm
