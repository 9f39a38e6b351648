#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptdirac/limits.hpp"
#include "ptdirac/oracle.hpp"
#include "ptdirac/pspin.hpp"
#include "ptdirac/refdata.hpp"
#include "ptdirac/specfun.hpp"
#include "ptdirac/report.hpp"
#include "ptdirac/spin.hpp"

namespace py = pybind11;
using namespace ptdirac;

PYBIND11_MODULE(_ptdirac, m) {
    m.doc() = "Relativistic bound states of the complex PT-symmetric Poschl-Teller potential";

    py::register_exception<error>(m, "PtdiracError");

    py::class_<potential_params>(m, "PotentialParams")
        .def(py::init<>())
        .def(py::init([](double alpha, double A, double B, double M, double x0) {
                 return potential_params{alpha, A, B, M, x0};
             }),
             py::arg("alpha") = 0.35, py::arg("A") = 8.0, py::arg("B") = 2.0,
             py::arg("M") = 5.0, py::arg("x0") = 0.1)
        .def_readwrite("alpha", &potential_params::alpha)
        .def_readwrite("A", &potential_params::A)
        .def_readwrite("B", &potential_params::B)
        .def_readwrite("M", &potential_params::M)
        .def_readwrite("x0", &potential_params::x0)
        .def("well_strength", &potential_params::well_strength)
        .def("barrier_strength", &potential_params::barrier_strength)
        .def("validate", &potential_params::validate);

    py::class_<exponent_set>(m, "ExponentSet")
        .def_readonly("lam", &exponent_set::lambda)
        .def_readonly("eta", &exponent_set::eta)
        .def_readonly("sigma", &exponent_set::sigma)
        .def_readonly("tau", &exponent_set::tau)
        .def_readonly("c1_residual", &exponent_set::c1_residual)
        .def_readonly("c2_residual", &exponent_set::c2_residual);

    py::class_<energy_solution>(m, "EnergySolution")
        .def_readonly("energy", &energy_solution::energy)
        .def_readonly("residual", &energy_solution::residual)
        .def_readonly("n_max", &energy_solution::n_max)
        .def_readonly("lambda_plus_eta", &energy_solution::lambda_plus_eta)
        .def_readonly("etilde_sq", &energy_solution::etilde_sq)
        .def_readonly("quant_gap", &energy_solution::quant_gap)
        .def_readonly("exponents", &energy_solution::exponents)
        .def_readonly("bracket", &energy_solution::bracket)
        .def_readonly("physical", &energy_solution::physical)
        .def_readonly("n", &energy_solution::n)
        .def_readonly("kappa", &energy_solution::kappa)
        .def("__repr__", [](const energy_solution& s) {
            return "<EnergySolution E=" + report::format_significant(s.energy) +
                   (s.physical ? " physical>" : " non-physical>");
        });

    py::class_<solve_outcome>(m, "SolveOutcome")
        .def_readonly("solutions", &solve_outcome::solutions)
        .def_readonly("excluded", &solve_outcome::excluded)
        .def_readonly("sigma_effective", &solve_outcome::sigma_effective)
        .def_readonly("tau_effective", &solve_outcome::tau_effective)
        .def("physical_root", [](const solve_outcome& o) -> py::object {
            if (const auto* r = o.physical_root()) return py::cast(*r);
            return py::none();
        });

    py::class_<solver_options>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("grid_points", &solver_options::grid_points)
        .def_readwrite("tol", &solver_options::tol)
        .def_readwrite("sigma", &solver_options::sigma)
        .def_readwrite("tau", &solver_options::tau);

    m.def("solve_spin_energy", &solve_spin_energy, py::arg("n"), py::arg("kappa"),
          py::arg("params"), py::arg("cs"), py::arg("options") = solver_options{});
    m.def("solve_pspin_energy", &solve_pspin_energy, py::arg("n"), py::arg("kappa"),
          py::arg("params"), py::arg("cps"), py::arg("options") = solver_options{});
    m.def("spin_energy_residual", &spin_energy_residual, py::arg("energy"), py::arg("n"),
          py::arg("kappa"), py::arg("params"), py::arg("cs"), py::arg("sigma") = 1,
          py::arg("tau") = -1);
    m.def("pspin_energy_residual", &pspin_energy_residual, py::arg("energy"), py::arg("n"),
          py::arg("kappa"), py::arg("params"), py::arg("cps"), py::arg("sigma") = 1,
          py::arg("tau") = -1);

    m.def("pochhammer", &specfun::pochhammer, py::arg("a"), py::arg("m"));
    m.def("gauss_2f1",
          [](double a, double b, double c, cplx z) { return specfun::gauss_2f1(a, b, c, z); },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("gauss_2f1_derivative",
          [](double a, double b, double c, cplx z) {
              return specfun::gauss_2f1_derivative(a, b, c, z);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("jacobi_p", &specfun::jacobi_p, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("x"));
    m.def("deformed_sinh", &specfun::deformed_sinh, py::arg("q"), py::arg("u"));
    m.def("deformed_cosh", &specfun::deformed_cosh, py::arg("q"), py::arg("u"));

    m.def("real_pt_potential", &real_pt_potential, py::arg("params"), py::arg("r"));
    m.def("complex_pt_potential", &complex_pt_potential, py::arg("params"), py::arg("x"));
    m.def("centrifugal_approx", &centrifugal_approx, py::arg("kappa_term"), py::arg("alpha"),
          py::arg("r"), py::arg("d0") = kD0);

    m.def("spin_upper_component",
          [](const energy_solution& sol, int n, int kappa, const potential_params& p, double x) {
              return spin_upper_component(sol, quantum_numbers(n, kappa), p, x);
          },
          py::arg("solution"), py::arg("n"), py::arg("kappa"), py::arg("params"), py::arg("x"));
    m.def("spin_lower_component",
          [](const energy_solution& sol, int n, int kappa, const potential_params& p, double cs,
             double x) {
              return spin_lower_component(sol, quantum_numbers(n, kappa), p, cs, x);
          },
          py::arg("solution"), py::arg("n"), py::arg("kappa"), py::arg("params"), py::arg("cs"),
          py::arg("x"));
    m.def("pspin_lower_component",
          [](const energy_solution& sol, int n, int kappa, const potential_params& p, double x) {
              return pspin_lower_component(sol, quantum_numbers(n, kappa), p, x);
          },
          py::arg("solution"), py::arg("n"), py::arg("kappa"), py::arg("params"), py::arg("x"));
    m.def("pspin_upper_component",
          [](const energy_solution& sol, int n, int kappa, const potential_params& p, double cps,
             double x) {
              return pspin_upper_component(sol, quantum_numbers(n, kappa), p, cps, x);
          },
          py::arg("solution"), py::arg("n"), py::arg("kappa"), py::arg("params"), py::arg("cps"),
          py::arg("x"));

    m.def("oracle_energy",
          [](int n, int kappa, const potential_params& p, const std::string& symmetry,
             double constant, int points) {
              symmetry_choice sym{symmetry == "spin" ? symmetry_kind::spin : symmetry_kind::pspin,
                                  constant};
              oracle::grid_spec grid;
              grid.points = points;
              auto r = oracle::oracle_energy(n, kappa, p, sym, grid);
              py::dict d;
              d["energy"] = r.energy;
              d["analytic_energy"] = r.analytic_energy;
              d["gap"] = r.gap;
              d["iterations"] = r.iterations;
              d["converged"] = r.converged;
              d["note"] = r.note;
              return d;
          },
          py::arg("n"), py::arg("kappa"), py::arg("params"), py::arg("symmetry"),
          py::arg("constant"), py::arg("points") = 4000);

    m.def("run_validation",
          [](bool quick) {
              auto r = report::run_validation({quick});
              py::dict d;
              d["all_pass"] = r.all_pass;
              d["markdown"] = r.markdown;
              py::list checks;
              for (const auto& c : r.checks) {
                  py::dict cd;
                  cd["id"] = c.id;
                  cd["name"] = c.name;
                  cd["pass"] = c.pass;
                  cd["detail"] = c.detail;
                  checks.append(cd);
              }
              d["checks"] = checks;
              return d;
          },
          py::arg("quick") = false);

    m.attr("CS_REFERENCE") = refdata::kCsFigures;
    m.attr("CPS_REFERENCE") = refdata::kCpsFigures;
}
