#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "mjt/cli.hpp"
#include "mjt/core.hpp"
#include "mjt/curved.hpp"
#include "mjt/error.hpp"
#include "mjt/export.hpp"
#include "mjt/jerk_oracle.hpp"
#include "mjt/polynomial.hpp"
#include "mjt/straight.hpp"
#include "mjt/tau1_solver.hpp"

namespace py = pybind11;
using namespace mjt;

namespace {

py::tuple vec(Vec2 v) { return py::make_tuple(v.x, v.y); }

double cost_of(const py::object& obj, int nodes) {
  if (py::isinstance<ViaSolution>(obj)) return jerk_cost(CurvedTrajectory(obj.cast<ViaSolution>()), nodes);
  return jerk_cost(StraightTrajectory(obj.cast<MotionSpec>()), nodes);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum-jerk straight and via-point trajectories";

  static py::exception<Error> error(m, "MjtError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Point2>(m, "Point2")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def_readwrite("x", &Point2::x)
      .def_readwrite("y", &Point2::y)
      .def("__iter__", [](const Point2& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const Point2& p) {
        std::ostringstream os;
        os << "Point2(" << p.x << ", " << p.y << ")";
        return os.str();
      });

  py::class_<MotionSpec>(m, "MotionSpec")
      .def(py::init<Point2, Point2, double>(), py::arg("start"), py::arg("end"),
           py::arg("duration"))
      .def_readwrite("start", &MotionSpec::start)
      .def_readwrite("end", &MotionSpec::end)
      .def_readwrite("duration", &MotionSpec::duration);

  py::class_<ViaMotionSpec>(m, "ViaMotionSpec")
      .def(py::init<MotionSpec, Point2>(), py::arg("base"), py::arg("via"))
      .def_readwrite("base", &ViaMotionSpec::base)
      .def_readwrite("via", &ViaMotionSpec::via)
      .def("path_scale", &ViaMotionSpec::path_scale);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("tau", &TrajectorySample::tau)
      .def_readonly("position", &TrajectorySample::position)
      .def_property_readonly("velocity", [](const TrajectorySample& s) { return vec(s.velocity); })
      .def_property_readonly("acceleration",
                             [](const TrajectorySample& s) { return vec(s.acceleration); })
      .def_property_readonly("jerk", [](const TrajectorySample& s) { return vec(s.jerk); });

  py::class_<ViaConstants>(m, "ViaConstants")
      .def_readonly("c1", &ViaConstants::c1)
      .def_readonly("c2", &ViaConstants::c2)
      .def_readonly("pi1", &ViaConstants::pi1)
      .def_readonly("pi2", &ViaConstants::pi2);

  py::class_<RootCandidate>(m, "RootCandidate")
      .def_readonly("tau1", &RootCandidate::tau1)
      .def_readonly("jerk_cost", &RootCandidate::jerk_cost)
      .def_readonly("ill_conditioned", &RootCandidate::ill_conditioned);

  py::class_<ViaSolution>(m, "ViaSolution")
      .def_readonly("spec", &ViaSolution::spec)
      .def_readonly("tau1", &ViaSolution::tau1)
      .def_readonly("constants", &ViaSolution::constants)
      .def_readonly("hamiltonian_residual", &ViaSolution::hamiltonian_residual)
      .def_readonly("candidates", &ViaSolution::candidates);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<std::vector<double>>(), py::arg("ascending"))
      .def_property_readonly("coefficients",
                             [](const Polynomial& p) {
                               auto c = p.coefficients();
                               return std::vector<double>(c.begin(), c.end());
                             })
      .def("degree", &Polynomial::degree)
      .def("__call__", &Polynomial::operator())
      .def(py::self * py::self)
      .def(py::self + py::self);

  py::class_<CostScanResult>(m, "CostScanResult")
      .def_readonly("grid", &CostScanResult::grid)
      .def_readonly("costs", &CostScanResult::costs)
      .def_readonly("minimizer", &CostScanResult::minimizer);

  m.def("validate_motion_spec", &validate_motion_spec);
  m.def("validate_via_spec", &validate_via_spec);

  m.def("straight_position", &straight_position, py::arg("spec"), py::arg("tau"));
  m.def("straight_velocity",
        [](const MotionSpec& s, double tau) { return vec(straight_velocity(s, tau)); },
        py::arg("spec"), py::arg("tau"));
  m.def("sample_straight", &sample_straight, py::arg("spec"), py::arg("n_samples"));

  m.def("find_real_roots", [](const Polynomial& p, double lo, double hi) {
    return find_real_roots(p, lo, hi);
  });
  m.def("tau1_polynomial", [](const ViaMotionSpec& s) {
    return build_tau1_polynomial(build_auxiliary_polys(s));
  });
  m.def("solve_via", &solve_via, py::arg("spec"));
  m.def("compute_constants", &compute_constants, py::arg("spec"), py::arg("tau1"));
  m.def("hamiltonian_residual", &hamiltonian_residual, py::arg("spec"), py::arg("tau1"));

  m.def("curved_position", &curved_position, py::arg("solution"), py::arg("tau"));
  m.def("curved_velocity",
        [](const ViaSolution& s, double tau) { return vec(curved_velocity(s, tau)); },
        py::arg("solution"), py::arg("tau"));
  m.def("sample_curved", &sample_curved, py::arg("solution"), py::arg("n_samples"));

  m.def("jerk_cost", &cost_of, py::arg("plan"), py::arg("nodes") = kJerkCostNodes,
        "Jerk cost of a MotionSpec (straight) or ViaSolution (curved).");
  m.def("cost_vs_tau1_scan", &cost_vs_tau1_scan, py::arg("spec"), py::arg("grid_size"));

  m.def("to_csv", [](const std::vector<TrajectorySample>& samples) {
    std::ostringstream os;
    write_csv(samples, os);
    return os.str();
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
