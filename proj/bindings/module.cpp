// Python bindings: the string-level document API (spec JSON in, canonical
// report JSON out) plus the root-datum helpers.  Library errors surface as
// two exception types mirroring the CLI exit codes: ValidationError for
// malformed input, ComputationError for well-formed input whose requested
// value does not exist.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "infchar/specfile.hpp"

namespace py = pybind11;

namespace {

PyObject* validation_error = nullptr;
PyObject* computation_error = nullptr;

std::vector<std::string> rat_strings(const infchar::RatVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const infchar::Rat& x : v) out.push_back(infchar::show_rat(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact infinitesimal characters of p-adic parameter data";

  validation_error =
      PyErr_NewException("infchar._core.ValidationError", PyExc_ValueError, nullptr);
  computation_error = PyErr_NewException("infchar._core.ComputationError",
                                         PyExc_RuntimeError, nullptr);
  m.add_object("ValidationError", py::reinterpret_borrow<py::object>(validation_error));
  m.add_object("ComputationError",
               py::reinterpret_borrow<py::object>(computation_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const infchar::error& e) {
      PyErr_SetString(infchar::is_validation_error(e.code()) ? validation_error
                                                             : computation_error,
                      e.what());
    }
  });

  m.def(
      "compute_json",
      [](const std::string& spec_json, bool check_roundtrip) {
        auto spec = infchar::parse_spec_json(spec_json);
        return infchar::report_to_json(infchar::compute_report(spec, check_roundtrip));
      },
      py::arg("spec_json"), py::arg("check_roundtrip") = false,
      "Validate a spec document and run the full pipeline.  Returns the "
      "canonical report JSON; computation failures are recorded in the "
      "report's `failures` list rather than raised.");

  m.def(
      "compute_text",
      [](const std::string& spec_json, bool check_roundtrip) {
        auto spec = infchar::parse_spec_json(spec_json);
        return infchar::report_to_text(infchar::compute_report(spec, check_roundtrip));
      },
      py::arg("spec_json"), py::arg("check_roundtrip") = false,
      "Same pipeline as compute_json, rendered for human eyes.");

  m.def(
      "validate_json",
      [](const std::string& spec_json) { (void)infchar::parse_spec_json(spec_json); },
      py::arg("spec_json"),
      "Parse and structurally validate a spec document; raises on failure.");

  m.def(
      "builtin_datum_json",
      [](const std::string& family, long long n) {
        return infchar::datum_to_json(infchar::builtin_datum(family, n));
      },
      py::arg("family"), py::arg("n"),
      "Canonical JSON for a builtin root datum (GL, SL, PGL, Sp, SO).");

  m.def(
      "dualize_json",
      [](const std::string& datum_json) {
        return infchar::datum_to_json(infchar::dualize(infchar::parse_datum_json(datum_json)));
      },
      py::arg("datum_json"), "Langlands dual of a root-datum document.");

  m.def(
      "weyl_order",
      [](const std::string& datum_json) {
        return infchar::weyl_group(infchar::parse_datum_json(datum_json)).order();
      },
      py::arg("datum_json"), "Order of the Weyl group of a root-datum document.");

  m.def(
      "delta",
      [](const std::string& datum_json) {
        return rat_strings(
            infchar::half_sum_positive_roots(infchar::parse_datum_json(datum_json)));
      },
      py::arg("datum_json"),
      "Half-sum of positive roots, as exact rational strings.");

  m.def(
      "twisting",
      [](const std::string& datum_json) -> std::optional<std::vector<std::string>> {
        auto tw = infchar::find_twisting_element(infchar::parse_datum_json(datum_json));
        if (!tw) return std::nullopt;
        std::vector<std::string> out;
        out.reserve(tw->size());
        for (const infchar::Int& x : *tw) out.push_back(x.str());
        return out;
      },
      py::arg("datum_json"),
      "Canonical integral weight pairing to 1 with every simple coroot, or "
      "None when no such weight exists.");
}
