#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hocalc/crosscheck.hpp"
#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/homcalc.hpp"
#include "hocalc/json_io.hpp"
#include "hocalc/nerve.hpp"
#include "hocalc/oracle.hpp"
#include "hocalc/segal.hpp"

namespace py = pybind11;
using namespace hocalc;
using json_io::json;

namespace {

// Documents cross the boundary through Python's json module.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

// A fixture name, a path, or a category document.
FiniteCategory category(const py::object& o) {
  if (py::isinstance<py::str>(o)) return json_io::load_category(o.cast<std::string>());
  return json_io::category_from_json(from_py(o));
}

Precat precat(const py::object& o, int n, int d) {
  if (n != 1 && n != 2) throw ValidationError("n must be 1 or 2");
  auto x = nerve(category(o), d);
  return n == 2 ? promote(x) : x;
}

ResolutionConfig config(int pass_limit, bool f2, const std::string& mode) {
  return ResolutionConfig{pass_limit, f2, boundary_mode_from_string(mode)};
}

}  // namespace

PYBIND11_MODULE(hocalc, m) {
  m.doc() = "Homotopy classes of maps between small n-categories";
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_RuntimeError);
  (void)validation;

  m.def("fixture_names", &fixtures::names);
  m.def("category", [](const py::object& o) { return to_py(json_io::to_json(category(o))); },
        py::arg("category"));

  m.def("hom_set", [](std::vector<int> s, std::vector<int> t) {
    json out = json::array();
    for (const auto& a : hom_set(ThetaShape(s), ThetaShape(t))) out.push_back(json_io::to_json(a));
    return to_py(out);
  }, py::arg("source"), py::arg("target"));
  m.def("compose", [](const py::object& g, const py::object& f) {
    return to_py(json_io::to_json(compose(json_io::morphism_from_json(from_py(g)),
                                          json_io::morphism_from_json(from_py(f)))));
  }, py::arg("first"), py::arg("second"));
  m.def("in_boundary", [](const py::object& a) { return in_boundary(json_io::morphism_from_json(from_py(a))); });

  m.def("is_ncategory", [](const py::object& c, int n, int d) {
    const auto r = is_ncategory(precat(c, n, d));
    return py::make_tuple(r.ok, r.witness);
  }, py::arg("category"), py::arg("n") = 1, py::arg("degree_bound") = 3);

  m.def("resolve", [](const py::object& c, int n, int d, bool f2, int pass_limit, const std::string& mode) {
    return to_py(json_io::to_json(resolve(precat(c, n, d), config(pass_limit, f2, mode))));
  }, py::arg("category"), py::arg("n") = 1, py::arg("degree_bound") = 3, py::arg("f2") = false,
     py::arg("pass_limit") = 8, py::arg("mode") = "free");

  m.def("hom_classes", [](const py::object& a, const py::object& b, int n, int d, const std::string& mode) {
    const auto res = resolve(precat(a, n, d), config(8, false, mode));
    return to_py(json_io::to_json(hom_classes(res, precat(b, n, d))));
  }, py::arg("a"), py::arg("b"), py::arg("n") = 1, py::arg("degree_bound") = 3, py::arg("mode") = "free");

  m.def("mapping_space", [](const py::object& a, const py::object& b, int d, int top) {
    const auto res = resolve(precat(a, 1, d), config(8, top >= 2, "free"));
    return to_py(json_io::to_json(mapping_space(res, precat(b, 1, d), top)));
  }, py::arg("a"), py::arg("b"), py::arg("degree_bound") = 3, py::arg("max_level") = 1);

  m.def("oracle_hom", [](const py::object& a, const py::object& b) {
    return oracle::ho_cat_hom(category(a), category(b)).count;
  }, py::arg("a"), py::arg("b"));
  m.def("theta_closure_agrees", [](int n, int bound) {
    return compare_with_canonicalize(oracle::theta_congruence_closure(n, bound)).ok;
  }, py::arg("n"), py::arg("bound") = 2);

  m.def("report", [](const std::string& suite, int d, const std::string& mode) {
    json rows = json::array();
    for (const auto& r : discrepancy_report(named_suite(suite), d, config(8, false, mode))) {
      rows.push_back(json_io::to_json(r));
    }
    return to_py(rows);
  }, py::arg("suite") = "acceptance", py::arg("degree_bound") = 3, py::arg("mode") = "free");
}
