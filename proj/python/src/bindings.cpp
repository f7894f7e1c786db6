#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "passgain/channel.hpp"
#include "passgain/config.hpp"
#include "passgain/coupling.hpp"
#include "passgain/error.hpp"
#include "passgain/experiments.hpp"
#include "passgain/gain.hpp"
#include "passgain/geometry.hpp"
#include "passgain/refine.hpp"

namespace py = pybind11;
using namespace passgain;

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Array gain of pinching-antenna systems on a single dielectric waveguide";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def(py::init([](double f_c, double d, double n_eff, double x_u,
                       std::optional<double> x_0, double alpha_wg, double delta_p) {
             SystemConfig c{f_c, d, n_eff, x_u, x_0, alpha_wg, delta_p};
             c.validate();
             return c;
           }),
           py::arg("f_c") = 28e9, py::arg("d") = 3.0, py::arg("n_eff") = 1.44,
           py::arg("x_u") = 0.0, py::arg("x_0") = py::none(), py::arg("alpha_wg") = 0.0,
           py::arg("delta_p") = 0.5)
      .def_readwrite("f_c", &SystemConfig::f_c)
      .def_readwrite("d", &SystemConfig::d)
      .def_readwrite("n_eff", &SystemConfig::n_eff)
      .def_readwrite("x_u", &SystemConfig::x_u)
      .def_readwrite("x_0", &SystemConfig::x_0)
      .def_readwrite("alpha_wg", &SystemConfig::alpha_wg)
      .def_readwrite("delta_p", &SystemConfig::delta_p)
      .def("validate", &SystemConfig::validate);

  py::class_<DerivedConstants>(m, "DerivedConstants")
      .def_readonly("lambda_", &DerivedConstants::lambda)
      .def_readonly("k0", &DerivedConstants::k0)
      .def_readonly("lambda_g", &DerivedConstants::lambda_g)
      .def_readonly("eta", &DerivedConstants::eta);

  py::class_<AntennaLayout>(m, "AntennaLayout")
      .def_static("from_positions", &AntennaLayout::from_positions, py::arg("positions"),
                  py::arg("center"), py::arg("min_spacing"))
      .def_property_readonly("positions",
                             [](const AntennaLayout& l) { return to_vector(l.positions()); })
      .def_property_readonly("center", &AntennaLayout::center)
      .def_property_readonly("min_spacing", &AntennaLayout::min_spacing)
      .def("__len__", &AntennaLayout::size);

  m.def("derive_constants", &derive_constants, py::arg("cfg"));
  m.def("parse_config", [](const std::string& text) { return parse_config(text); });
  m.def("load_config", &load_config, py::arg("path"));
  m.def("symmetric_uniform_layout", &symmetric_uniform_layout, py::arg("cfg"), py::arg("n"),
        py::arg("spacing"));

  m.def("los_coefficient", &los_coefficient, py::arg("x_n"), py::arg("cfg"), py::arg("consts"));
  m.def("inwaveguide_phase", &inwaveguide_phase, py::arg("x_n"), py::arg("x_0"),
        py::arg("consts"));
  m.def("waveguide_attenuation", &waveguide_attenuation, py::arg("x_n"), py::arg("x_0"),
        py::arg("alpha_db_per_m"));
  m.def("array_gain_exact", &array_gain_exact, py::arg("layout"), py::arg("cfg"),
        py::arg("consts"));

  m.def("gain_symmetric",
        [](const std::vector<double>& deltas, const SystemConfig& cfg,
           const DerivedConstants& k) { return gain_symmetric(deltas, cfg, k); },
        py::arg("deltas"), py::arg("cfg"), py::arg("consts"));
  m.def("gain_uniform", &gain_uniform, py::arg("n"), py::arg("cfg"), py::arg("consts"));
  m.def("gain_uniform_integral", &gain_uniform_integral, py::arg("n"), py::arg("cfg"),
        py::arg("consts"));
  m.def("upper_bound_sum",
        [](const std::vector<double>& deltas, const SystemConfig& cfg,
           const DerivedConstants& k) { return upper_bound_sum(deltas, cfg, k); },
        py::arg("deltas"), py::arg("cfg"), py::arg("consts"));
  m.def("f_ub", &f_ub, py::arg("x"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("a_uni", &BoundReport::a_uni)
      .def_readonly("a_hat_sum", &BoundReport::a_hat_sum)
      .def_readonly("a_hat_closed", &BoundReport::a_hat_closed)
      .def_readonly("l_eps", &BoundReport::l_eps)
      .def_readonly("eps", &BoundReport::eps);
  m.def("upper_bound_closed", &upper_bound_closed, py::arg("n"), py::arg("cfg"),
        py::arg("consts"));
  m.def("find_xstar", [] {
    const XStar s = find_xstar();
    return py::make_tuple(s.x, s.f);
  });
  m.def("optimal_antenna_number", &optimal_antenna_number, py::arg("cfg"), py::arg("consts"));
  m.def("max_gain_estimate", &max_gain_estimate, py::arg("cfg"), py::arg("consts"));
  m.def("gain_limit", &gain_limit, py::arg("cfg"), py::arg("consts"));

  py::enum_<Side>(m, "Side").value("right", Side::right).value("left", Side::left);
  m.def("combined_path", &combined_path, py::arg("delta"), py::arg("side"), py::arg("cfg"));
  m.def("refine_shift", &refine_shift, py::arg("delta"), py::arg("side"), py::arg("cfg"),
        py::arg("consts"));

  py::class_<RefinedLayout>(m, "RefinedLayout")
      .def_property_readonly("layout", [](const RefinedLayout& r) { return r.layout; })
      .def_property_readonly("right_shifts", [](const RefinedLayout& r) { return r.right.shifts; })
      .def_property_readonly("left_shifts", [](const RefinedLayout& r) { return r.left.shifts; })
      .def_property_readonly("right_targets",
                             [](const RefinedLayout& r) { return r.right.targets; })
      .def_property_readonly("left_targets",
                             [](const RefinedLayout& r) { return r.left.targets; });
  m.def("build_refined_layout", &build_refined_layout, py::arg("n"), py::arg("cfg"),
        py::arg("consts"));

  m.def("coupling_matrix",
        [](std::size_t n, double delta, const DerivedConstants& k) {
          const Matrix c = coupling_matrix(n, delta, k).dense();
          std::vector<std::vector<double>> rows(n, std::vector<double>(n));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = c(i, j);
          return rows;
        },
        py::arg("n"), py::arg("delta"), py::arg("consts"));
  m.def("gain_mc",
        [](std::size_t n, double delta, const SystemConfig& cfg, const DerivedConstants& k) {
          const McGain g = gain_mc(n, delta, cfg, k);
          return py::make_tuple(g.gain, g.floored);
        },
        py::arg("n"), py::arg("delta"), py::arg("cfg"), py::arg("consts"),
        "Returns (gain, number of floored eigenvalues).");
  m.def("gain_mc_two_closed", &gain_mc_two_closed, py::arg("delta"), py::arg("cfg"),
        py::arg("consts"));
  m.def("f_mc", &f_mc, py::arg("x"), py::arg("n_eff"));

  py::enum_<SweepKind>(m, "SweepKind")
      .value("fub_curve", SweepKind::fub_curve)
      .value("fmc_curve", SweepKind::fmc_curve)
      .value("gain_vs_n", SweepKind::gain_vs_n)
      .value("maxgain_vs_spacing", SweepKind::maxgain_vs_spacing)
      .value("gain_vs_delta_mc", SweepKind::gain_vs_delta_mc);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("kind", &SweepSpec::kind)
      .def_readwrite("delta_p", &SweepSpec::delta_p)
      .def_readwrite("n_list", &SweepSpec::n_list)
      .def_readwrite("n_eff", &SweepSpec::n_eff)
      .def_readwrite("n_max", &SweepSpec::n_max)
      .def_readwrite("x_max", &SweepSpec::x_max)
      .def_readwrite("grid_step", &SweepSpec::grid_step)
      .def_readwrite("cases", &SweepSpec::cases)
      .def_readwrite("seed", &SweepSpec::seed)
      .def_readwrite("trials", &SweepSpec::trials)
      .def_readwrite("exhaustive", &SweepSpec::exhaustive);

  m.def("run_sweep",
        [](const SweepSpec& spec, const SystemConfig& cfg) {
          std::vector<py::tuple> rows;
          for (const auto& p : run_sweep(spec, cfg)) {
            rows.push_back(py::make_tuple(p.series, p.x, p.y, p.std_error));
          }
          return rows;
        },
        py::arg("spec"), py::arg("cfg") = SystemConfig{},
        "Returns a list of (series, x, y, stderr) tuples.");
  m.def("sweep_csv",
        [](const SweepSpec& spec, const SystemConfig& cfg) {
          return format_csv(run_sweep(spec, cfg), "seed=" + std::to_string(spec.seed));
        },
        py::arg("spec"), py::arg("cfg") = SystemConfig{});
}
