#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acm/instantiate.hpp"
#include "acm/model.hpp"
#include "acm/transform.hpp"
#include "acm/validate.hpp"

namespace acm {

inline constexpr std::string_view kFormatVersion = "1.0";

struct LoadOptions {
  /// Reject documents holding gids that resolve nowhere (DanglingReference).
  /// abstract_form and expression_ref are never checked here: the former
  /// points into the pattern document, the latter is a validation warning.
  bool resolve_references = true;
};

/// Parses an envelope. Throws ParseError (subjects = {line, column}),
/// SchemaError (subjects = {json path}), DanglingReference (subjects = gids).
Model load(std::string_view bytes, LoadOptions options = {});

/// Canonical form: sorted keys, 2-space indent, elements sorted by gid,
/// fields at their default value omitted, trailing newline.
std::string save(const Model& model);

/// Throws InvalidArgument when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

Model load_file(const std::filesystem::path& path, LoadOptions options = {});
void save_file(const std::filesystem::path& path, const Model& model);

std::string save_trace(std::span<const TraceLink> links);
std::vector<TraceLink> load_trace(std::string_view bytes);

struct DiagnosticReport {
  std::string path;
  Notation notation = Notation::sacm;
  std::vector<Diagnostic> diagnostics;
};

std::string save_diagnostics(std::span<const DiagnosticReport> reports);

/// {"<ArtifactReference gid>": true|false, ...}
EvidenceStatus parse_evidence(std::string_view bytes);

/// {"roles": {"<role>": ["v", ...] | "v"}, "connectors": {"<gid>": {"count": n} |
/// {"chosen": b} | {"subset": ["<gid>", ...]}}}
BindingTable parse_binding_table(std::string_view bytes);

}  // namespace acm
