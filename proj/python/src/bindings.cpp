#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "koszul/document.hpp"
#include "koszul/errors.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

LoadOptions load_options(const std::optional<std::string>& field, std::optional<int> trunc) {
  LoadOptions o;
  if (field) o.field = Field::parse(*field);
  o.truncation = trunc;
  return o;
}

RunOptions run_options(int hdeg, uint64_t seed, const std::optional<std::string>& check) {
  RunOptions r;
  r.hdeg = hdeg;
  r.seed = seed;
  r.only = check;
  return r;
}

}  // namespace

// JSON crosses the boundary as text; the Python package decodes it.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact decision procedures for generalized and classical Koszul properties";

  static py::exception<Error> error(m, "KoszulError");
  static py::exception<SchemaError> schema_error(m, "SchemaError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SchemaError& e) {
      PyErr_SetString(schema_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (e.kind() + ": " + e.what()).c_str());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::class_<SpecDocument>(m, "Document")
      .def_static(
          "from_file",
          [](const std::filesystem::path& p, std::optional<std::string> field, std::optional<int> trunc) {
            return load_document(p, load_options(field, trunc));
          },
          py::arg("path"), py::arg("field") = py::none(), py::arg("trunc") = py::none())
      .def_static(
          "from_text",
          [](const std::string& text, std::optional<std::string> field, std::optional<int> trunc) {
            return parse_document(text, load_options(field, trunc));
          },
          py::arg("text"), py::arg("field") = py::none(), py::arg("trunc") = py::none())
      .def_property_readonly("name", [](const SpecDocument& d) { return d.name; })
      .def_property_readonly("species", [](const SpecDocument& d) { return d.species; })
      .def_property_readonly("field", [](const SpecDocument& d) { return d.field.spec_string(); })
      .def_property_readonly("algebra_dims", [](const SpecDocument& d) { return d.algebra->dims(); })
      .def_property_readonly("check_names",
                             [](const SpecDocument& d) {
                               std::vector<std::string> out;
                               for (const auto& c : d.checks) out.push_back(c.name);
                               return out;
                             })
      .def("module_dims", [](const SpecDocument& d, const std::string& expr) { return evaluate_module(d, expr).dims(); })
      .def("export_algebra_json", [](const SpecDocument& d) { return export_algebra(*d.algebra).dump(); })
      .def(
          "run_json",
          [](const SpecDocument& d, std::optional<std::string> check, int hdeg, uint64_t seed) {
            py::gil_scoped_release release;
            return run_document(d, run_options(hdeg, seed, check)).dump();
          },
          py::arg("check") = py::none(), py::arg("hdeg") = 8, py::arg("seed") = 1)
      .def(
          "run_text",
          [](const SpecDocument& d, std::optional<std::string> check, int hdeg, uint64_t seed) {
            return render_text(run_document(d, run_options(hdeg, seed, check)));
          },
          py::arg("check") = py::none(), py::arg("hdeg") = 8, py::arg("seed") = 1);

  m.def(
      "run_corpus_json",
      [](const std::filesystem::path& dir, int hdeg, uint64_t seed) {
        py::gil_scoped_release release;
        return corpus_report(run_corpus(dir, run_options(hdeg, seed, std::nullopt))).dump();
      },
      py::arg("dir"), py::arg("hdeg") = 8, py::arg("seed") = 1);
  m.def(
      "import_algebra_dims",
      [](const std::string& structure) { return import_algebra(Json::parse(structure)).dims(); },
      py::arg("structure"));
}
