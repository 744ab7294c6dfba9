#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fringe/arbiter.hpp"
#include "fringe/game.hpp"
#include "fringe/geometry.hpp"
#include "fringe/matter_waves.hpp"
#include "fringe/wave_optics.hpp"

namespace py = pybind11;
using namespace fringe;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prisoners' Dilemma on a multi-slit diffraction table";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::enum_<Strategy>(m, "Strategy")
      .value("Cooperate", Strategy::Cooperate)
      .value("Defect", Strategy::Defect);

  py::class_<StrategyProfile>(m, "StrategyProfile")
      .def(py::init<Strategy, Strategy>(), py::arg("alice"), py::arg("bob"))
      .def_readwrite("alice", &StrategyProfile::alice)
      .def_readwrite("bob", &StrategyProfile::bob)
      .def("__eq__", [](const StrategyProfile& a, const StrategyProfile& b) { return a == b; })
      .def("__repr__", [](const StrategyProfile& p) { return "(" + to_string(p) + ")"; });

  py::class_<PayoffCoefficients>(m, "PayoffCoefficients")
      .def(py::init<double, double, double, double>(), py::arg("t"), py::arg("r"),
           py::arg("p"), py::arg("s"))
      .def_property_readonly("t", &PayoffCoefficients::t)
      .def_property_readonly("r", &PayoffCoefficients::r)
      .def_property_readonly("p", &PayoffCoefficients::p)
      .def_property_readonly("s", &PayoffCoefficients::s);

  py::class_<GameParameters>(m, "GameParameters")
      .def(py::init<PayoffCoefficients, double, double>(), py::arg("coeffs"),
           py::arg("lam"), py::arg("k"))
      .def_property_readonly("coeffs", &GameParameters::coeffs)
      .def_property_readonly("lam", &GameParameters::lambda)
      .def_property_readonly("k", &GameParameters::k)
      .def("with_lambda", &GameParameters::with_lambda);

  py::class_<PayoffPair>(m, "PayoffPair")
      .def_readonly("alice", &PayoffPair::alice)
      .def_readonly("bob", &PayoffPair::bob);

  py::class_<MixedEquilibrium>(m, "MixedEquilibrium")
      .def_readonly("cooperate_probability", &MixedEquilibrium::cooperate_probability)
      .def_readonly("degenerate", &MixedEquilibrium::degenerate);

  m.def("separation_for_profile", &separation_for_profile);
  m.def("quantum_payoff", &quantum_payoff);
  m.def("is_symmetric_ne", &is_symmetric_ne);
  m.def("pure_ne_profiles", &pure_ne_profiles);
  m.def("symmetric_mixed_ne", &symmetric_mixed_ne);
  m.def("defection_threshold", &defection_threshold);
  m.def("cooperation_threshold", &cooperation_threshold);

  py::class_<Detector>(m, "Detector")
      .def(py::init<>())
      .def_readwrite("bin_width", &Detector::bin_width)
      .def_readwrite("peak_threshold", &Detector::peak_threshold)
      .def_readwrite("min_resolvable_spacing_bins", &Detector::min_resolvable_spacing_bins);

  py::class_<FringeMeasurement>(m, "FringeMeasurement")
      .def_readonly("delta_u", &FringeMeasurement::delta_u)
      .def_readonly("d_inferred", &FringeMeasurement::d_inferred)
      .def_readonly("resolved", &FringeMeasurement::resolved)
      .def_readonly("peaks_used", &FringeMeasurement::peaks_used);

  // Two equal slits at +-d/2: (u, intensity, measurement).
  m.def(
      "double_slit",
      [](double separation, double width, double lam, std::size_t samples) {
        ApertureWindow window({Slit{-0.5 * separation, width},
                               Slit{0.5 * separation, width}});
        ScreenGrid grid = default_grid(lam, separation);
        grid = ScreenGrid(grid.u_min(), grid.u_max(), samples);
        const Detector detector;
        const auto pattern =
            intensity_pattern(window, SlitState::all_open(2), lam, grid);
        const auto peaks = detect_peaks(pattern, detector);
        std::vector<double> u(pattern.intensity.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = grid.at(i);
        return py::make_tuple(u, pattern.intensity,
                              measure_fringe_spacing(peaks, lam, detector));
      },
      py::arg("separation"), py::arg("width"), py::arg("lam"),
      py::arg("samples") = kDefaultSampleCount);

  py::class_<SlitPositions>(m, "SlitPositions")
      .def_readonly("alice_c", &SlitPositions::alice_c)
      .def_readonly("alice_d", &SlitPositions::alice_d)
      .def_readonly("bob_c", &SlitPositions::bob_c)
      .def_readonly("bob_d", &SlitPositions::bob_d);

  py::class_<LayoutSolution>(m, "LayoutSolution")
      .def_readonly("feasible", &LayoutSolution::feasible)
      .def_readonly("positions", &LayoutSolution::positions)
      .def_readonly("residual", &LayoutSolution::residual)
      .def_readonly("sign_pattern", &LayoutSolution::sign_pattern);

  m.def("solve_layout", &solve_layout);

  m.attr("PLANCK") = kConstants.h;
  m.attr("ELECTRON_MASS") = kConstants.m_e;
  m.def(
      "de_broglie_wavelength",
      [](double mass, double velocity) {
        return de_broglie_wavelength(Particle(mass, velocity));
      },
      py::arg("mass"), py::arg("velocity"));
  m.def(
      "velocity_bound_for_cooperation",
      [](const PayoffCoefficients& c, double k, double sigma, double mass) {
        return velocity_bound_for_cooperation(c, k, UnitScale(sigma), mass);
      },
      py::arg("coeffs"), py::arg("k"), py::arg("sigma") = 1.0,
      py::arg("mass") = kConstants.m_e);
  m.def(
      "scaling_factor_for_velocity",
      [](double v, const PayoffCoefficients& c, double sigma, double mass) {
        return scaling_factor_for_velocity(v, c, UnitScale(sigma), mass);
      },
      py::arg("target_velocity"), py::arg("coeffs"), py::arg("sigma") = 1.0,
      py::arg("mass") = kConstants.m_e);

  py::enum_<PayoffMode>(m, "PayoffMode")
      .value("Direct", PayoffMode::Direct)
      .value("Measured", PayoffMode::Measured);
  py::enum_<LayoutMode>(m, "LayoutMode")
      .value("Abstract", LayoutMode::Abstract)
      .value("FixedWindow", LayoutMode::FixedWindow);
  py::enum_<Regime>(m, "Regime")
      .value("ClassicalUnresolved", Regime::ClassicalUnresolved)
      .value("QuantumResolved", Regime::QuantumResolved);
  py::enum_<Classification>(m, "Classification")
      .value("DefectionNE", Classification::DefectionNE)
      .value("CooperationNE", Classification::CooperationNE)
      .value("Both", Classification::Both)
      .value("NoPureSymmetricNE", Classification::NoPureSymmetricNE);

  py::class_<ApparatusConfig>(m, "ApparatusConfig")
      .def(py::init([](const GameParameters& params, PayoffMode mode,
                       LayoutMode layout, std::optional<double> slit_width,
                       const Detector& detector) {
             ApparatusConfig cfg;
             cfg.params = params;
             cfg.payoff_mode = mode;
             cfg.layout_mode = layout;
             cfg.slit_width = slit_width;
             cfg.detector = detector;
             return cfg;
           }),
           py::arg("params"), py::arg("payoff_mode") = PayoffMode::Direct,
           py::arg("layout_mode") = LayoutMode::Abstract,
           py::arg("slit_width") = std::nullopt, py::arg("detector") = Detector{});

  py::class_<GameOutcome>(m, "GameOutcome")
      .def_readonly("profile", &GameOutcome::profile)
      .def_readonly("payoffs", &GameOutcome::payoffs)
      .def_readonly("regime", &GameOutcome::regime)
      .def_readonly("measurement", &GameOutcome::measurement)
      .def_readonly("payoff_discrepancy", &GameOutcome::payoff_discrepancy);

  py::class_<ThresholdPair>(m, "ThresholdPair")
      .def_readonly("lambda_low", &ThresholdPair::lambda_low)
      .def_readonly("lambda_high", &ThresholdPair::lambda_high);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("lambda_grid", &SweepResult::lambda_grid)
      .def_readonly("classification", &SweepResult::classification)
      .def_readonly("detected", &SweepResult::detected)
      .def_readonly("analytic_low", &SweepResult::analytic_low)
      .def_readonly("analytic_high", &SweepResult::analytic_high);

  m.def("play_round", &play_round);
  m.def("classify_regime", &classify_regime);
  m.def("sweep_lambda", &sweep_lambda, py::arg("lo"), py::arg("hi"),
        py::arg("steps"), py::arg("coeffs"), py::arg("k"));
}
