#include "acm/cli.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "acm/instantiate.hpp"
#include "acm/io.hpp"
#include "acm/report.hpp"
#include "acm/transform.hpp"
#include "acm/validate.hpp"

namespace acm {

namespace {

// Input problems the user must fix before anything can run.
bool usage_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::SchemaError ||
         code == ErrorCode::DanglingReference || code == ErrorCode::InvalidArgument;
}

struct Styler {
  bool enabled;
  [[nodiscard]] std::string severity(Severity s) const {
    const std::string text(to_string(s));
    if (!enabled) return text;
    return (s == Severity::error ? "\x1b[31m" : "\x1b[33m") + text + "\x1b[0m";
  }
};

std::string styled(const Diagnostic& d, const Styler& style) {
  std::string line = format_diagnostic(d);
  const std::size_t plain = to_string(d.severity).size();
  return style.severity(d.severity) + line.substr(plain);
}

void print_error(std::ostream& err, const std::string& context, const Error& e) {
  err << "acm: " << context << ": " << e.what() << "\n";
  for (const auto& line : e.details()) err << "  " << line << "\n";
}

struct ValidateArgs {
  std::vector<std::string> paths;
  std::string notation;
  std::string format = "text";
};

struct Loaded {
  std::optional<Model> model;
  std::string error;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err, const Styler& style) {
  std::vector<std::future<Loaded>> jobs;
  for (const auto& path : a.paths) {
    jobs.push_back(std::async(std::launch::async, [path] {
      Loaded l;
      try {
        l.model = load_file(path, LoadOptions{.resolve_references = false});
      } catch (const Error& e) {
        l.error = e.what();
      }
      return l;
    }));
  }
  std::vector<DiagnosticReport> reports;
  int exit = kExitOk;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Loaded l = jobs[i].get();
    if (!l.model) {
      err << "acm: " << a.paths[i] << ": " << l.error << "\n";
      return kExitUsage;
    }
    if (!a.notation.empty() && to_string(l.model->notation()) != a.notation) {
      err << "acm: " << a.paths[i] << ": document notation is " << to_string(l.model->notation())
          << ", not " << a.notation << "\n";
      return kExitUsage;
    }
    reports.push_back(DiagnosticReport{a.paths[i], l.model->notation(), check(*l.model)});
    if (has_errors(reports.back().diagnostics)) exit = kExitFindings;
  }
  if (a.format == "json") {
    out << save_diagnostics(reports);
  } else {
    for (const auto& r : reports) {
      const std::string prefix = reports.size() > 1 ? r.path + ": " : "";
      for (const auto& d : r.diagnostics) out << prefix << styled(d, style) << "\n";
    }
  }
  for (const auto& r : reports) {
    const auto errors = std::ranges::count_if(r.diagnostics, [](const Diagnostic& d) {
      return d.severity == Severity::error;
    });
    err << r.path << ": " << errors << " error(s), " << r.diagnostics.size() - errors << " warning(s)\n";
  }
  return exit;
}

struct TransformArgs {
  std::string path;
  std::string from;
  std::string out;
};

int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
  Model input;
  try {
    input = load_file(a.path);
  } catch (const Error& e) {
    print_error(err, a.path, e);
    return kExitUsage;
  }
  if (to_string(input.notation()) != a.from) {
    err << "acm: " << a.path << ": document notation is " << to_string(input.notation()) << ", not "
        << a.from << "\n";
    return kExitUsage;
  }
  TransformResult result;
  try {
    result = input.notation() == Notation::gsn ? gsn_to_sacm(input) : cae_to_sacm(input);
  } catch (const Error& e) {
    print_error(err, a.path, e);
    return kExitFailure;
  }
  for (const auto& w : result.warnings) err << format_diagnostic(w) << "\n";
  try {
    save_file(a.out, result.model);
    write_file(a.out + ".trace.json", save_trace(result.trace));
  } catch (const Error& e) {
    print_error(err, a.out, e);
    return kExitUsage;
  }
  out << a.out << ": " << result.model.size() << " elements, " << result.trace.size() << " trace links\n";
  return kExitOk;
}

struct InstantiateArgs {
  std::string pattern;
  std::string bindings;
  std::string out;
};

int cmd_instantiate(const InstantiateArgs& a, std::ostream& out, std::ostream& err, const Styler& style) {
  Model pattern;
  BindingTable table;
  try {
    pattern = load_file(a.pattern);
  } catch (const Error& e) {
    print_error(err, a.pattern, e);
    return kExitUsage;
  }
  try {
    table = parse_binding_table(read_file(a.bindings));
  } catch (const Error& e) {
    print_error(err, a.bindings, e);
    return kExitUsage;
  }
  InstantiationResult result;
  try {
    result = instantiate(pattern, table);
  } catch (const Error& e) {
    print_error(err, a.pattern, e);
    return kExitFailure;
  }
  try {
    save_file(a.out, result.model);
    write_file(a.out + ".trace.json", save_trace(result.trace));
  } catch (const Error& e) {
    print_error(err, a.out, e);
    return kExitUsage;
  }
  const auto findings = verify_instantiation(result.model, pattern);
  for (const auto& d : findings) out << styled(d, style) << "\n";
  out << a.out << ": " << result.model.size() << " elements\n";
  return findings.empty() ? kExitOk : kExitFindings;
}

struct ReportArgs {
  std::string path;
  std::string lang = "en";
  std::string format = "md";
  std::string out;
  bool diagnostics = false;
};

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  Model model;
  try {
    model = load_file(a.path, LoadOptions{.resolve_references = false});
  } catch (const Error& e) {
    print_error(err, a.path, e);
    return kExitUsage;
  }
  ReportOptions options;
  options.lang = a.lang;
  options.format = *parse_report_format(a.format);
  options.include_diagnostics = a.diagnostics;
  const std::string text = render(model, options);
  if (a.out.empty()) {
    out << text;
    return kExitOk;
  }
  try {
    write_file(a.out, text);
  } catch (const Error& e) {
    print_error(err, a.out, e);
    return kExitUsage;
  }
  return kExitOk;
}

struct EvaluateArgs {
  std::string path;
  std::string evidence;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  Model model;
  EvidenceStatus evidence;
  try {
    model = load_file(a.path);
    evidence = parse_evidence(read_file(a.evidence));
  } catch (const Error& e) {
    print_error(err, "evaluate", e);
    return kExitUsage;
  }
  // Non-SACM input is transformed first; gids are reported in the input's terms.
  std::map<Gid, Gid> back;
  if (model.notation() != Notation::sacm) {
    try {
      TransformResult t = model.notation() == Notation::gsn ? gsn_to_sacm(model) : cae_to_sacm(model);
      EvidenceStatus mapped;
      for (const auto& [gid, valid] : evidence) {
        const auto results = trace_lookup(t.trace, gid);
        if (results.empty()) mapped[gid] = valid;
        for (const auto& r : results) mapped[r] = valid;
      }
      for (const auto& l : t.trace) {
        if (l.rule != "Copy") back.emplace(l.result_gid, l.source_gid);
      }
      evidence = std::move(mapped);
      model = std::move(t.model);
    } catch (const Error& e) {
      print_error(err, a.path, e);
      return kExitFindings;
    }
  }
  Evaluation result;
  try {
    result = evaluate(model, evidence);
  } catch (const Error& e) {
    print_error(err, a.path, e);
    return kExitFindings;
  }
  auto shown = [&](const Gid& gid) {
    auto it = back.find(gid);
    return it == back.end() ? gid : it->second;
  };
  for (const auto& w : result.warnings) {
    Diagnostic d = w;
    for (auto& g : d.element_gids) g = shown(g);
    err << format_diagnostic(d) << "\n";
  }
  const auto roots = root_claims(model);
  std::vector<std::pair<Gid, std::string>> rows;
  for (const auto& [gid, status] : result.statuses) {
    std::string line(to_string(status));
    if (std::ranges::find(roots, gid) != roots.end()) line += " root";
    rows.emplace_back(shown(gid), line);
  }
  std::ranges::sort(rows);
  bool ok = true;
  for (const auto& [gid, line] : rows) out << gid << " " << line << "\n";
  for (const auto& r : roots) ok = ok && holds(result.statuses.at(r));
  return ok ? kExitOk : kExitFindings;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Assurance case models: validate, transform, instantiate, evaluate, report", "acm"};
  app.require_subcommand(1);
  const Styler style{color};

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "check well-formedness rules");
  validate->add_option("paths", va.paths, "model files (.acm.json)")->required();
  validate->add_option("--notation", va.notation, "expected notation")
      ->check(CLI::IsMember({"gsn", "cae", "sacm"}));
  validate->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "map a GSN or CAE document to SACM");
  transform->add_option("path", ta.path, "input model")->required();
  transform->add_option("--from", ta.from, "input notation")->required()->check(CLI::IsMember({"gsn", "cae"}));
  transform->add_option("--out", ta.out, "output path; the trace goes to <out>.trace.json")->required();

  InstantiateArgs ia;
  auto* inst = app.add_subcommand("instantiate", "instantiate a pattern");
  inst->add_option("pattern", ia.pattern, "pattern model")->required();
  inst->add_option("--bindings", ia.bindings, "binding table (JSON)")->required();
  inst->add_option("--out", ia.out, "output path")->required();

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "render a report");
  report->add_option("path", ra.path, "model")->required();
  report->add_option("--lang", ra.lang, "language tag");
  report->add_option("--format", ra.format, "md or txt")->check(CLI::IsMember({"md", "txt"}));
  report->add_option("--out", ra.out, "write here instead of stdout");
  report->add_flag("--diagnostics", ra.diagnostics, "append validation findings");

  EvaluateArgs ea;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "propagate claim status from evidence");
  evaluate_cmd->add_option("path", ea.path, "model")->required();
  evaluate_cmd->add_option("--evidence", ea.evidence, "evidence map (JSON)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "acm: " << e.what() << "\n" << "run 'acm --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(va, out, err, style);
    if (transform->parsed()) return cmd_transform(ta, out, err);
    if (inst->parsed()) return cmd_instantiate(ia, out, err, style);
    if (report->parsed()) return cmd_report(ra, out, err);
    if (evaluate_cmd->parsed()) return cmd_evaluate(ea, out, err);
  } catch (const Error& e) {
    print_error(err, "error", e);
    return usage_error(e.code()) ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace acm
