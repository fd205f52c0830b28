#include "flagschur/hecke.hpp"
#include "flagschur/io.hpp"
#include "flagschur/qschur.hpp"
#include "flagschur/serialize.hpp"
#include "flagschur/suites.hpp"
#include "flagschur/zeroschur.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

namespace py = pybind11;
using namespace flagschur;

namespace {

// Matrices cross the boundary as "0,1;1,0" text or a list of rows.
OrbitMatrix to_matrix(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_matrix(obj.cast<std::string>());
  const auto rows = obj.cast<std::vector<std::vector<int>>>();
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ParseError("matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return OrbitMatrix(static_cast<int>(rows.size()), flat);
}

py::list from_matrix(const OrbitMatrix& a) {
  py::list rows;
  for (int i = 1; i <= a.n(); ++i) {
    py::list row;
    for (int j = 1; j <= a.n(); ++j) row.append(a(i, j));
    rows.append(row);
  }
  return rows;
}

Composition to_comp(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_composition(obj.cast<std::string>());
  return Composition(obj.cast<std::vector<int>>());
}

py::object json_value(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json json_arg(const py::handle& obj) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

bool is_element(const py::handle& obj) { return py::isinstance<py::dict>(obj); }

Permutation to_perm(const py::handle& obj, int n = 0) {
  if (py::isinstance<py::str>(obj)) return Permutation::parse(obj.cast<std::string>(), n);
  return Permutation(obj.cast<std::vector<int>>());
}

py::dict report_dict(const Report& rep) {
  py::list failed;
  for (const auto& c : rep.checks)
    if (!c.passed) failed.append(py::make_tuple(c.name, c.detail));
  py::dict out;
  out["suite"] = rep.suite;
  out["checks"] = rep.checks.size();
  out["failures"] = failed;
  out["passed"] = rep.passed();
  return out;
}

Report run_suite(const std::string& suite, int n, int r) {
  Report all;
  all.suite = suite;
  if (suite == "q-relations") {
    all.merge(verify_relations_q(n, r));
  } else if (suite == "zero-relations") {
    all.merge(verify_relations_0(n, r));
    all.merge(check_star_associativity(n, r));
    all.merge(check_matrix_block(n, r));
    if (n == 2) all.merge(preprojective_check(r));
  } else if (suite == "hecke") {
    all.merge(check_hecke(n));
  } else if (suite == "oracle") {
    all.merge(check_closed_forms(n, r));
    all.merge(check_hall_numbers(n, r));
    all.merge(check_basis_B(n, r));
    all.merge(check_open_orbit(n, r));
    all.merge(check_psi(n, r));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return all;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "q-Schur, 0-Schur and 0-Hecke algebra products";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def(
      "multiply",
      [](const py::object& a, const py::object& b) {
        const Element x = is_element(a) ? element_from_json(json_arg(a)) : Element::basis(to_matrix(a));
        const Element y = is_element(b) ? element_from_json(json_arg(b)) : Element::basis(to_matrix(b));
        return json_value(element_to_json(multiply(x, y)));
      },
      py::arg("a"), py::arg("b"), "Product in S_q(n,r); matrices or element dicts in, element dict out.");

  m.def(
      "structure_constant",
      [](const py::object& a, const py::object& a2, const py::object& a3) {
        return json_value(qpoly_to_json(structure_constant(to_matrix(a), to_matrix(a2), to_matrix(a3))));
      },
      "Coefficients (ascending in q) of e_a3 in e_a e_a2.");

  m.def(
      "star",
      [](const py::object& a, const py::object& b) -> py::object {
        if (is_element(a) || is_element(b)) {
          const IntElement x = is_element(a) ? int_element_from_json(json_arg(a)) : IntElement::basis(to_matrix(a));
          const IntElement y = is_element(b) ? int_element_from_json(json_arg(b)) : IntElement::basis(to_matrix(b));
          return json_value(int_element_to_json(star(x, y)));
        }
        const auto s = star(to_matrix(a), to_matrix(b));
        if (!s) return py::none();
        return from_matrix(*s);
      },
      py::arg("a"), py::arg("b"), "Product in G(n,r); None when the types do not match.");

  m.def("decompose", [](const py::object& a) { return json_value(word_to_json(word_decompose(to_matrix(a)))); });
  m.def("deg_leq", [](const py::object& a, const py::object& b) { return deg_leq(to_matrix(a), to_matrix(b)); });
  m.def("open_orbit", [](const py::object& d, const py::object& e) { return from_matrix(open_orbit(to_comp(d), to_comp(e))); });
  m.def("closed_orbit",
        [](const py::object& d, const py::object& e) { return from_matrix(closed_orbit(to_comp(d), to_comp(e))); });
  m.def("nested_idempotent", [](const py::object& d, const py::object& nbar) {
    return from_matrix(nested_idempotent(to_comp(d), to_comp(nbar)));
  });
  m.def("hasse_dot", [](const py::object& d, const py::object& e) { return hasse_dot(to_comp(d), to_comp(e)); });

  m.def(
      "hecke_mult",
      [](const py::object& x, const py::object& y) {
        // Cycle text is read at the larger of the two sizes.
        const int n = std::max(to_perm(x).n(), to_perm(y).n());
        return hecke_mult(to_perm(x, n), to_perm(y, n)).images();
      },
      "Product in H_0(n) of two permutations given as image lists or cycle text.");
  m.def("t_sigma", [](const py::object& s) { return t_sigma(to_perm(s)).images(); });

  m.def(
      "verify",
      [](const std::string& suite, int n, int r, bool allow) {
        set_allow_large(allow);
        const Report rep = run_suite(suite, n, r < 0 ? n : r);
        set_allow_large(false);
        return report_dict(rep);
      },
      py::arg("suite"), py::arg("n"), py::arg("r") = -1, py::arg("allow_large") = false);

  m.def("prime_limit", &prime_limit);
}
