#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sheafccz/catalog.hpp"
#include "sheafccz/errors.hpp"
#include "sheafccz/linalg.hpp"
#include "sheafccz/pipeline.hpp"

namespace py = pybind11;
using namespace sheafccz;

namespace {

// Configs cross the boundary as JSON text; the Python side wraps dicts.
RunConfig config_from(const std::string& text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j, base_dir);
}

std::string build(const std::string& cfg_text, const std::string& base_dir, const std::string& out) {
  const RunConfig cfg = config_from(cfg_text, base_dir);
  const Instance inst = build_instance(cfg);
  if (!out.empty()) write_artifacts(cfg, inst, out);
  return build_summary(cfg, inst).dump();
}

std::string verify(const std::string& cfg_text, const std::string& base_dir, const std::string& suite) {
  const RunConfig cfg = config_from(cfg_text, base_dir);
  return run_verify(cfg, build_instance(cfg), suite).dump();
}

std::string params(const std::string& cfg_text, const std::string& base_dir) {
  const RunConfig cfg = config_from(cfg_text, base_dir);
  return compute_params(cfg, build_instance(cfg)).dump();
}

std::size_t matrix_rank(unsigned r, const std::vector<std::vector<std::uint32_t>>& rows) {
  Field f(r);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!f.contains(rows[i][j])) throw DomainError("entry " + std::to_string(rows[i][j]) + " outside the field");
      m(i, j) = static_cast<Elem>(rows[i][j]);
    }
  }
  return rank(f, m);
}

}  // namespace

PYBIND11_MODULE(_sheafccz, m) {
  m.doc() = "Sheaf codes, cup-product forms and duality checks";

  static py::exception<Error> base(m, "Error");
  static py::exception<ConfigError> config_error(m, "ConfigError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      config_error(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.attr("schema_version") = kSchemaVersion;
  m.def("build", &build, py::arg("config"), py::arg("base_dir") = "", py::arg("out") = "");
  m.def("verify", &verify, py::arg("config"), py::arg("base_dir") = "", py::arg("suite") = "all");
  m.def("params", &params, py::arg("config"), py::arg("base_dir") = "");
  m.def("suites", &suite_names);
  m.def("catalog", &catalog::names);
  m.def("rank", &matrix_rank, py::arg("r"), py::arg("rows"), "Rank over F_{2^r} of a list of rows.");
}
