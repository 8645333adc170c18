#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exbetti/error.hpp"
#include "exbetti/json_io.hpp"
#include "exbetti/module_realizer.hpp"
#include "exbetti/oracle.hpp"

namespace py = pybind11;
using namespace exbetti;

namespace {

std::string betti_json(const std::string& doc) {
  return to_json(ek_betti(module_from_json(parse_json(doc)))).dump();
}

std::string koszul_json(const std::string& doc, std::optional<int> cap) {
  auto module = module_from_json(parse_json(doc));
  return to_json(cap ? koszul_betti(module, *cap) : koszul_betti(module)).dump();
}

std::string corners_json(const std::string& doc) {
  auto module = module_from_json(parse_json(doc));
  auto scan = extremal_from_table(ek_betti(module));
  auto view = corner_matrix(module);
  std::vector<int> ideals;
  for (int h : view.corner_ideals) ideals.push_back(h + 1);
  return Json{{"corners", to_json(scan.corners)}, {"matrix", view.rows}, {"corner_ideals", ideals}}.dump();
}

std::string diagram_text(const std::string& doc) {
  auto table = ek_betti(module_from_json(parse_json(doc)));
  return render_diagram(table, corners_of(extremal_from_table(table).corners));
}

bool strongly_stable(const std::string& doc) { return is_strongly_stable(ideal_from_json(parse_json(doc))); }
bool stable(const std::string& doc) { return is_stable(ideal_from_json(parse_json(doc))); }

std::string check_values_json(const std::string& spec, const std::string& mode) {
  auto doc = spec_from_json(parse_json(spec));
  auto positions = validate_positions(doc.spec);
  if (!positions.admissible()) {
    throw Error(positions.status == PositionStatus::Uncovered ? ErrorKind::Uncovered : ErrorKind::InfeasibleSpec,
                positions.reason);
  }
  return to_json(check_values(doc.spec, parse_mode(mode))).dump();
}

std::string realize_ideal_json(const std::string& spec, std::optional<std::string> mode) {
  auto doc = spec_from_json(parse_json(spec));
  return to_json(construct_ideal(doc.spec, mode ? parse_mode(*mode) : doc.mode)).dump();
}

std::string realize_module_json(const std::string& spec, std::optional<int> m, std::optional<std::string> mode) {
  auto doc = spec_from_json(parse_json(spec));
  const Mode chosen = mode ? parse_mode(*mode) : doc.mode;
  const int rank = m ? *m : doc.m.value_or(0);
  if (rank < 1) throw Error(ErrorKind::InvalidSpec, "rank m missing");
  auto verdict = validate_module_spec(doc.spec, rank);
  if (!verdict.admissible()) {
    throw Error(verdict.status == PositionStatus::Uncovered ? ErrorKind::Uncovered : ErrorKind::InfeasibleSpec,
                verdict.reason);
  }
  auto search = find_corner_matrix(doc.spec, rank, chosen);
  if (search.status == SearchStatus::Infeasible) throw Error(ErrorKind::InfeasibleSpec, search.reason);
  if (search.status == SearchStatus::BudgetExhausted) throw Error(ErrorKind::BudgetExceeded, search.reason);
  auto module = construct_module(doc.spec, *search.matrix, chosen);
  return Json{{"matrix", to_json(*search.matrix)}, {"module", to_json(module)}}.dump();
}

std::vector<std::string> census_json(int n, int max_degree, std::optional<int> max_gens) {
  CensusLimits limits;
  if (max_gens) limits.max_gens = *max_gens;
  std::vector<std::string> out;
  enumerate_strongly_stable(n, max_degree, limits, [&](const MonomialIdeal& i) { out.push_back(to_json(i).dump()); });
  return out;
}

}  // namespace

PYBIND11_MODULE(_exbetti, m) {
  m.doc() = "JSON-level bindings; see the exbetti package for the Python API";
  static PyObject* error_type = PyErr_NewException("exbetti._exbetti.Error", PyExc_RuntimeError, nullptr);
  m.add_object("Error", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      err.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error_type, err.ptr());
    }
  });
  m.def("betti", &betti_json, py::arg("doc"));
  m.def("koszul_betti", &koszul_json, py::arg("doc"), py::arg("cap") = std::nullopt);
  m.def("corners", &corners_json, py::arg("doc"));
  m.def("diagram", &diagram_text, py::arg("doc"));
  m.def("is_strongly_stable", &strongly_stable, py::arg("doc"));
  m.def("is_stable", &stable, py::arg("doc"));
  m.def("check_values", &check_values_json, py::arg("spec"), py::arg("mode"));
  m.def("realize_ideal", &realize_ideal_json, py::arg("spec"), py::arg("mode") = std::nullopt);
  m.def("realize_module", &realize_module_json, py::arg("spec"), py::arg("m") = std::nullopt,
        py::arg("mode") = std::nullopt);
  m.def("census", &census_json, py::arg("n"), py::arg("max_degree"), py::arg("max_gens") = std::nullopt);
}
