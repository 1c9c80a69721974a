#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socenter/json_io.hpp"

namespace py = pybind11;
using namespace socenter;

namespace {

GaussianRational rational(const std::string& s) {
  mpq_class q(s, 10);
  q.canonicalize();
  return GaussianRational(q);
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Central elements of U(so_n)";

  py::class_<Element>(m, "Element")
      .def_property_readonly("rank", &Element::rank)
      .def("is_zero", &Element::is_zero)
      .def("__len__", &Element::size)
      .def("__str__", &Element::str)
      .def("__repr__", [](const Element& x) { return "<Element rank " + std::to_string(x.rank()) + ": " + x.str() + ">"; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__add__", [](const Element& a, const Element& b) { return add(a, b); })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__mul__", [](const Element& a, const Element& b) { return multiply(a, b); })
      .def("to_json", [](const Element& x) { return dump(to_json(x)); })
      .def_static("from_json", [](const std::string& s) { return element_from_json(json::parse(s)); });

  m.def("gen", py::overload_cast<int, int, int>(&gen), py::arg("n"), py::arg("j"), py::arg("i"));
  m.def("one", &Element::one, py::arg("n"));
  m.def("commutator", py::overload_cast<const Element&, const Element&>(&commutator));
  m.def("opp", &opp);
  m.def("casimir_omega", &casimir_omega, py::arg("n"), py::arg("k"));
  m.def("embed_shift", &embed_shift, py::arg("x"), py::arg("n_from"), py::arg("n_to"));
  m.def("specialize", [](const Element& x, const std::string& u) { return specialize(x, rational(u)); });

  m.def("build_C", &build_C, py::arg("n"), py::call_guard<py::gil_scoped_release>());
  m.def("build_pf", &build_pf, py::arg("indices"), py::arg("n"));
  m.def("build_PF", &build_PF, py::arg("m"));
  m.def("is_central_json", [](const Element& x, int threads) {
    CentralityReport r;
    {
      py::gil_scoped_release release;
      r = is_central(x, threads);
    }
    return dump(to_json(r));
  }, py::arg("x"), py::arg("threads") = 0);
  m.def("monic_degree_check", &monic_degree_check);
  m.def("iwasawa_pf_check_json", [](int mm) { return dump(to_json(iwasawa_pf_check(mm))); });

  m.def("gamma_json", [](const Element& x) { return dump(to_json(gamma(x))); });
  m.def("gamma_n", &gamma_n);

  m.def("verify_json", [](const std::string& lemma, int n, const gt::Weight& lambda, int ell, double tol) {
    gt::Report r;
    if (lemma == "pipi") r = gt::verify_pipi(n, lambda, ell, tol);
    else if (lemma == "noX") r = gt::verify_noX(n, lambda, ell, tol);
    else if (lemma == "X2") r = gt::verify_X2(n, lambda, ell, tol);
    else if (lemma == "X1") r = gt::verify_X1(n, lambda, ell, tol);
    else if (lemma == "pf_shift") r = gt::verify_pf_shift(n / 2, lambda, tol);
    else if (lemma == "casimir") r = gt::verify_casimir(n - 1, lambda, tol);
    else if (lemma == "brackets") r = gt::verify_brackets(n - 1, lambda, tol);
    else throw py::value_error("unknown lemma " + lemma);
    return dump(to_json(r));
  }, py::arg("lemma"), py::arg("n"), py::arg("lambda_"), py::arg("ell") = 0, py::arg("tol") = 1e-8);
  m.def("shift_indices", &gt::shift_indices);
  m.def("gt_dimension", [](int N, const gt::Weight& lambda) { return gt::enumerate_patterns(N, lambda).size(); });
}
