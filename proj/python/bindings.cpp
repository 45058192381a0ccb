#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reglab/cocycle.hpp"
#include "reglab/deligne.hpp"
#include "reglab/dirac.hpp"
#include "reglab/regulator.hpp"
#include "reglab/scenarios.hpp"

namespace py = pybind11;
using namespace reglab;

namespace {

TrigPoly make_poly(int dim, const std::vector<std::pair<std::vector<int>, cplx>>& coeffs) {
  TrigPoly f(dim);
  for (const auto& [modes, c] : coeffs) {
    require(int(modes.size()) == dim, "BadParams", "mode length must equal dim");
    Mode n;
    for (int i = 0; i < dim; ++i) n[i] = modes[std::size_t(i)];
    f.add_raw_coeff(n, c);
  }
  return f;
}

UnitFunction make_unit(const std::vector<int>& winding, const TrigPoly& logpart) {
  require(int(winding.size()) == logpart.dim(), "BadParams",
          "winding length must equal the log-part dimension");
  std::array<int, 3> w{0, 0, 0};
  for (int i = 0; i < logpart.dim(); ++i) w[std::size_t(i)] = winding[std::size_t(i)];
  return UnitFunction(w, logpart);
}

}  // namespace

PYBIND11_MODULE(_reglab, m) {
  m.doc() = "Numerical laboratory for circle Dirac spectral invariants, Toeplitz "
            "determinants, cyclic cocycles, and Deligne pairings.";

  py::register_exception<Error>(m, "ReglabError");

  m.def("reduce_mod_z", [](cplx z) { return reduce(z).rep(); },
        "Canonical representative in C/Z with real part in [0,1).");
  m.def("eq_mod_z",
        [](cplx a, cplx b, double tol) {
          return eq_mod_z(reduce(a), reduce(b), TolerancePolicy{tol, 0.0});
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

  py::class_<TrigPoly>(m, "TrigPoly")
      .def(py::init(&make_poly), py::arg("dim"), py::arg("coeffs"))
      .def_property_readonly("dim", &TrigPoly::dim)
      .def_property_readonly("degree", &TrigPoly::degree)
      .def("coeffs",
           [](const TrigPoly& f) {
             std::vector<std::pair<std::vector<int>, cplx>> out;
             for (const auto& [n, c] : f.coeffs()) {
               std::vector<int> modes;
               for (int i = 0; i < f.dim(); ++i) modes.push_back(n[i]);
               out.emplace_back(modes, c * twopii_pow(f.scale()));
             }
             return out;
           })
      .def("__mul__", [](const TrigPoly& a, const TrigPoly& b) { return a * b; })
      .def("__add__", [](const TrigPoly& a, const TrigPoly& b) { return a + b; })
      .def("derive", &TrigPoly::derive, py::arg("axis") = 0)
      .def("integrate", &TrigPoly::integrate)
      .def("__call__",
           [](const TrigPoly& f, double t) { return f.eval1(t); });

  py::class_<UnitFunction>(m, "UnitFunction")
      .def(py::init(&make_unit), py::arg("winding"), py::arg("logpart"))
      .def_property_readonly("winding",
                             [](const UnitFunction& u) {
                               std::vector<int> w;
                               for (int i = 0; i < u.dim(); ++i)
                                 w.push_back(u.winding()[std::size_t(i)]);
                               return w;
                             })
      .def_property_readonly("logpart", &UnitFunction::logpart)
      .def("__mul__", [](const UnitFunction& a, const UnitFunction& b) { return a * b; })
      .def("inverse", &UnitFunction::inverse)
      .def("__call__", [](const UnitFunction& u, double t) { return u.eval1(t); });

  m.def("exp_unit", &exp_unit, py::arg("f"), py::arg("out_degree"),
        py::arg("tail_tol") = 1e-9);
  m.def("log_unit",
        [](int samples, const std::function<cplx(double)>& u) {
          auto r = log_unit(samples,
                            [&](const std::array<double, 3>& t) { return u(t[0]); }, 1);
          return std::make_pair(r.winding[0], r.logpart);
        },
        py::arg("samples_per_period"), py::arg("u"),
        "Recover (winding, logpart) of a nonvanishing circle function.");

  m.def("sigma2",
        [](const TrigPoly& f, const UnitFunction& u) {
          return sigma_eval(ProductClass(f, {u})).rep();
        },
        py::arg("f"), py::arg("u"),
        "sigma_2(exp(f) cup u) on the circle as the canonical C/Z representative.");

  m.def("eta_xi",
        [](cplx holonomy) {
          EtaXi r = eta_xi_closed(CircleDirac(holonomy));
          return py::make_tuple(r.eta, r.dim_ker, r.xi.rep());
        },
        py::arg("holonomy"), "(eta, dim ker, xi) of the twisted circle operator.");
  m.def("eta_zeta_oracle",
        [](cplx holonomy) { return eta_zeta_oracle(CircleDirac(holonomy)); },
        py::arg("holonomy"));
  m.def("rho_line_bundle",
        [](cplx holonomy) { return rho_dirac(GradedBundle({{holonomy, 1}})).rep(); },
        py::arg("holonomy"));

  m.def("toeplitz_index",
        [](const UnitFunction& u, int N, int B) { return toeplitz_index(u, WindowSpec(N, B)); },
        py::arg("u"), py::arg("N") = 128, py::arg("B") = 32);
  m.def("det_mult_commutator",
        [](const UnitFunction& u1, const UnitFunction& u2, int N, int B) {
          return det_mult_commutator(u1, u2, WindowSpec(N, B));
        },
        py::arg("u1"), py::arg("u2"), py::arg("N") = 256, py::arg("B") = 64);

  m.def("deligne_pairing",
        [](const UnitFunction& u1, const UnitFunction& u2) {
          return pairing_closed_form(u1, u2).rep();
        },
        py::arg("u1"), py::arg("u2"), "Closed-form cup pairing evaluated on [S^1].");
  m.def("deligne_pairing_cech",
        [](const UnitFunction& u1, const UnitFunction& u2, const std::vector<double>& cuts) {
          ArcCover cover(cuts);
          return evaluate(cup(unit_to_deligne(u1, cover), unit_to_deligne(u2, cover))).rep();
        },
        py::arg("u1"), py::arg("u2"),
        py::arg("cuts") = std::vector<double>{0.05, 0.3, 0.55, 0.8});

  m.def("cochain_pair",
        [](const TrigPoly& f0, const TrigPoly& f1, int N, int B) {
          auto consts = CocycleConstants::for_d(1);
          LambdaChain c = lambda2(f0, f1);
          return py::make_tuple(cochain_a(c, WindowSpec(N, B), consts), cochain_b(c, 1));
        },
        py::arg("f0"), py::arg("f1"), py::arg("N") = 256, py::arg("B") = 64,
        "Operator- and form-side cochain values of [f0 (x) f1].");

  m.def("registered_scenarios", &registered_scenarios);
  m.def("run_scenario",
        [](const std::string& name, const std::string& config_json) {
          json overrides =
              config_json.empty() ? json::object() : json::parse(config_json);
          Report rep = run_scenario(configure_scenario(name, overrides));
          return rep.to_json().dump();
        },
        py::arg("name"), py::arg("config_json") = std::string(),
        "Run a named verification scenario; returns the report as JSON text.");
}
