// Python bindings. Models travel as opaque handles; everything else as
// plain dicts, lists and strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "acm/error.hpp"
#include "acm/instantiate.hpp"
#include "acm/io.hpp"
#include "acm/report.hpp"
#include "acm/transform.hpp"
#include "acm/validate.hpp"

namespace py = pybind11;
using namespace acm;

namespace {

py::dict diagnostic_dict(const Diagnostic& d) {
  py::dict out;
  out["rule_id"] = d.rule_id;
  out["severity"] = std::string(to_string(d.severity));
  out["element_gids"] = d.element_gids;
  out["message"] = d.message;
  return out;
}

py::list diagnostic_list(const std::vector<Diagnostic>& ds) {
  py::list out;
  for (const auto& d : ds) out.append(diagnostic_dict(d));
  return out;
}

py::list trace_list(const std::vector<TraceLink>& links) {
  py::list out;
  for (const auto& l : links) out.append(py::make_tuple(l.source_gid, l.result_gid, l.rule));
  return out;
}

BindingTable bindings_from(const py::object& table) {
  if (py::isinstance<py::str>(table)) return parse_binding_table(table.cast<std::string>());
  auto dumps = py::module_::import("json").attr("dumps");
  return parse_binding_table(dumps(table).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_acm, m) {
  m.doc() = "SACM assurance-case toolkit";

  static auto* acm_error = new py::exception<Error>(m, "AcmError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(*acm_error)(py::str(e.what()));
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("subjects") = e.subjects();
      PyErr_SetObject(acm_error->ptr(), exc.ptr());
    }
  });

  py::class_<Model>(m, "Model")
      .def_property_readonly("notation", [](const Model& self) { return std::string(to_string(self.notation())); })
      .def("__len__", &Model::size)
      .def("__contains__", [](const Model& self, const std::string& gid) { return self.contains(gid); })
      .def("gids",
           [](const Model& self) {
             std::vector<Gid> out;
             for (const auto& e : self.elements()) out.push_back(e.gid);
             return out;
           })
      .def("kind", [](const Model& self, const std::string& gid) { return std::string(to_string(self.at(gid).kind)); })
      .def("count",
           [](const Model& self, const std::string& kind) {
             int n = 0;
             for (const auto& e : self.elements()) n += to_string(e.kind) == kind ? 1 : 0;
             return n;
           })
      .def("to_json", [](const Model& self) { return save(self); })
      .def("__repr__", [](const Model& self) {
        return "<acm.Model " + std::string(to_string(self.notation())) + " with " + std::to_string(self.size()) +
               " elements>";
      });

  m.def("loads", [](const std::string& text) { return load(text); }, py::arg("text"));
  m.def("load", [](const std::filesystem::path& path) { return load_file(path); }, py::arg("path"));
  m.def("dumps", [](const Model& model) { return save(model); }, py::arg("model"));
  m.def("save", [](const Model& model, const std::filesystem::path& path) { save_file(path, model); },
        py::arg("model"), py::arg("path"));

  m.def("check", [](const Model& model) { return diagnostic_list(check(model)); }, py::arg("model"));

  const auto transformed = [](TransformResult r) {
    return py::make_tuple(std::move(r.model), trace_list(r.trace), diagnostic_list(r.warnings));
  };
  m.def("gsn_to_sacm", [transformed](const Model& model) { return transformed(gsn_to_sacm(model)); },
        py::arg("model"));
  m.def("cae_to_sacm", [transformed](const Model& model) { return transformed(cae_to_sacm(model)); },
        py::arg("model"));

  m.def("resolve_citation",
        [](const Model& model, const std::string& gid) { return resolve_citation(model, gid).chain; },
        py::arg("model"), py::arg("gid"));

  m.def("instantiate",
        [](const Model& pattern, const py::object& bindings) {
          auto r = instantiate(pattern, bindings_from(bindings));
          return py::make_tuple(std::move(r.model), trace_list(r.trace));
        },
        py::arg("pattern"), py::arg("bindings"));
  m.def("verify_instantiation",
        [](const Model& concrete, const Model& pattern) {
          return diagnostic_list(verify_instantiation(concrete, pattern));
        },
        py::arg("concrete"), py::arg("pattern"));

  m.def("evaluate",
        [](const Model& model, const std::map<std::string, bool>& evidence) {
          EvidenceStatus ev(evidence.begin(), evidence.end());
          std::map<std::string, std::string> out;
          for (const auto& [gid, status] : evaluate(model, ev).statuses) out[gid] = std::string(to_string(status));
          return out;
        },
        py::arg("model"), py::arg("evidence"));
  m.def("root_claims", &root_claims, py::arg("model"));

  m.def("render",
        [](const Model& model, const std::string& lang, const std::string& format, bool diagnostics,
           bool terminology) {
          const auto f = parse_report_format(format);
          if (!f) throw Error(ErrorCode::InvalidArgument, "unknown report format '" + format + "'");
          return render(model, ReportOptions{.lang = lang,
                                             .format = *f,
                                             .include_diagnostics = diagnostics,
                                             .include_terminology = terminology});
        },
        py::arg("model"), py::arg("lang") = "en", py::arg("format") = "md", py::arg("diagnostics") = false,
        py::arg("terminology") = true);
}
