#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "probdef/constraints.hpp"
#include "probdef/entail.hpp"
#include "probdef/error.hpp"
#include "probdef/zrank.hpp"

namespace py = pybind11;
using namespace probdef;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.get_num().get_str())),
                  py::int_(py::str(r.get_den().get_str())));
}

ConstraintSystem strict_and_evidence(const DefaultTheory& t, const KnowledgeBase& kb,
                                     bool with_defaults) {
  ConstraintSystem sys{vocabulary_of(t, kb, {}), t.strict, {}, {}};
  if (with_defaults) sys.members.insert(sys.members.end(), t.defaults.begin(), t.defaults.end());
  sys.members.insert(sys.members.end(), kb.conjuncts.begin(), kb.conjuncts.end());
  return sys;
}

Semantics semantics_of(const std::string& tag) {
  if (auto s = parse_semantics(tag)) return *s;
  throw py::value_error("unknown semantics '" + tag + "' (expected zero, one, z, lex or ce)");
}

}  // namespace

PYBIND11_MODULE(_probdef, m) {
  m.doc() = "Tight-interval entailment over probabilistic default theories.";

  // Owned by the module for the life of the process.
  static PyObject* error_type =
      py::exception<Error>(m, "ProbdefError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = to_string(e.kind());
      exc.attr("line") = e.line();
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<DefaultTheory>(m, "Theory")
      .def_static("from_text", &parse_theory, py::arg("text"))
      .def_static(
          "from_file", [](const std::string& path) { return load_theory(path); }, py::arg("path"))
      .def_property_readonly("strict",
                             [](const DefaultTheory& t) {
                               std::vector<std::string> out;
                               for (const auto& c : t.strict) out.push_back(c.to_string());
                               return out;
                             })
      .def_property_readonly("defaults",
                             [](const DefaultTheory& t) {
                               std::vector<std::string> out;
                               for (const auto& c : t.defaults) out.push_back(c.to_string());
                               return out;
                             })
      .def("__str__", &print_theory)
      .def("__repr__", [](const DefaultTheory& t) {
        return "<Theory strict=" + std::to_string(t.strict.size()) +
               " defaults=" + std::to_string(t.defaults.size()) + ">";
      });

  py::class_<Interval>(m, "Interval")
      .def_property_readonly("status", [](const Interval& i) { return to_string(i.status); })
      .def_property_readonly("lower",
                             [](const Interval& i) -> py::object {
                               return i.has_bounds() ? to_fraction(i.lower) : py::none();
                             })
      .def_property_readonly("upper",
                             [](const Interval& i) -> py::object {
                               return i.has_bounds() ? to_fraction(i.upper) : py::none();
                             })
      .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
      .def("__str__", &Interval::to_string)
      .def("__repr__", [](const Interval& i) { return "<Interval " + i.to_string() + ">"; });

  m.def(
      "entail",
      [](const std::string& semantics, const DefaultTheory& theory, const std::string& query,
         const std::string& evidence) {
        return entail(semantics_of(semantics), theory, parse_kb(evidence), parse_query(query))
            .interval;
      },
      py::arg("semantics"), py::arg("theory"), py::arg("query"), py::arg("evidence") = "true",
      "Tight interval for `query` under one of zero, one, z, lex, ce.");

  m.def(
      "explain",
      [](const std::string& semantics, const DefaultTheory& theory, const std::string& query,
         const std::string& evidence) {
        return describe(
            entail(semantics_of(semantics), theory, parse_kb(evidence), parse_query(query)),
            theory);
      },
      py::arg("semantics"), py::arg("theory"), py::arg("query"), py::arg("evidence") = "true",
      "Intermediate artifacts behind an answer, as text.");

  m.def(
      "z_partition",
      [](const DefaultTheory& theory) -> std::optional<std::vector<std::vector<std::string>>> {
        const auto zp = z_partition(theory, vocabulary_of(theory, {}, {}));
        if (!zp) return std::nullopt;
        std::vector<std::vector<std::string>> strata;
        for (const auto& s : zp->strata) {
          auto& names = strata.emplace_back();
          for (auto i : s) names.push_back(theory.defaults[i].to_string());
        }
        return strata;
      },
      py::arg("theory"), "Strata as lists of defaults; None if sigma-inconsistent.");

  m.def(
      "sigma_consistent",
      [](const DefaultTheory& theory) {
        return sigma_consistent(theory, vocabulary_of(theory, {}, {}));
      },
      py::arg("theory"));

  m.def(
      "satisfiable",
      [](const DefaultTheory& theory, const std::string& evidence, bool with_defaults) {
        return satisfiable(strict_and_evidence(theory, parse_kb(evidence), with_defaults));
      },
      py::arg("theory"), py::arg("evidence") = "true", py::arg("with_defaults") = true);
}
