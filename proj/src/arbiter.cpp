#include "fringe/arbiter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fringe {

std::string_view to_string(LayoutMode mode) {
  return mode == LayoutMode::Abstract ? "abstract" : "fixed_window";
}

std::string_view to_string(PayoffMode mode) {
  return mode == PayoffMode::Direct ? "direct" : "measured";
}

LayoutMode parse_layout_mode(std::string_view text) {
  if (text == "abstract") return LayoutMode::Abstract;
  if (text == "fixed_window" || text == "fixed") return LayoutMode::FixedWindow;
  throw ValidationError("layout mode must be abstract or fixed_window, got '" +
                        std::string(text) + "'");
}

PayoffMode parse_payoff_mode(std::string_view text) {
  if (text == "direct") return PayoffMode::Direct;
  if (text == "measured") return PayoffMode::Measured;
  throw ValidationError("payoff mode must be direct or measured, got '" +
                        std::string(text) + "'");
}

std::string_view to_string(Regime regime) {
  return regime == Regime::QuantumResolved ? "quantum_resolved"
                                           : "classical_unresolved";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::DefectionNE:
      return "defection_ne";
    case Classification::CooperationNE:
      return "cooperation_ne";
    case Classification::Both:
      return "both";
    case Classification::NoPureSymmetricNE:
      return "no_pure_symmetric_ne";
  }
  return "no_pure_symmetric_ne";
}

void ApparatusConfig::validate() const {
  detector.validate();
  if (slit_width && (!std::isfinite(*slit_width) || !(*slit_width > 0.0))) {
    throw ValidationError("slit width must be positive");
  }
}

namespace {

double closest_open_spacing(const ApertureWindow& window,
                            const SlitState& state) {
  const auto slits = window.slits();
  double open_min = std::numeric_limits<double>::infinity();
  double any_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < slits.size(); ++i) {
    for (std::size_t j = i + 1; j < slits.size(); ++j) {
      const double gap = std::abs(slits[i].center - slits[j].center);
      any_min = std::min(any_min, gap);
      if (state.open[i] && state.open[j]) open_min = std::min(open_min, gap);
    }
  }
  if (std::isfinite(open_min)) return open_min;
  if (std::isfinite(any_min)) return any_min;
  return slits.front().width / kDefaultWidthFraction;
}

}  // namespace

std::pair<ApertureWindow, SlitState> aperture_for_profile(
    StrategyProfile profile, const ApparatusConfig& config) {
  const PayoffCoefficients& coeffs = config.params.coeffs();
  if (config.layout_mode == LayoutMode::FixedWindow) {
    const LayoutSolution layout = solve_layout(coeffs);
    if (layout.feasible) {
      const double width = config.slit_width.value_or(
          kDefaultWidthFraction * min_slit_spacing(layout.positions));
      return fixed_window_for_profile(profile, layout, width);
    }
  }
  const double d = separation_for_profile(profile, coeffs);
  const double width = config.slit_width.value_or(kDefaultWidthFraction * d);
  return abstract_window_for_profile(profile, coeffs, width);
}

RoundObservation observe_aperture(const ApertureWindow& window,
                                  const SlitState& state,
                                  const ApparatusConfig& config) {
  const double lambda = config.params.lambda();
  if (state.open.size() != window.size()) {
    throw ValidationError("slit state length does not match the window");
  }
  const ScreenGrid grid =
      config.grid.value_or(default_grid(lambda, closest_open_spacing(window, state)));
  DiffractionPattern pattern = intensity_pattern(window, state, lambda, grid);
  std::vector<Peak> peaks = detect_peaks(pattern, config.detector);
  FringeMeasurement measurement =
      measure_fringe_spacing(peaks, lambda, config.detector);
  return {window, state, std::move(pattern), std::move(peaks),
          std::move(measurement)};
}

RoundObservation observe_round(StrategyProfile profile,
                               const ApparatusConfig& config) {
  auto [window, state] = aperture_for_profile(profile, config);
  return observe_aperture(window, state, config);
}

SlitState parse_open_override(const ApertureWindow& window,
                              std::string_view spec) {
  SlitState state{std::vector<bool>(window.size(), false)};
  if (spec == "none") return state;
  if (spec == "all") return SlitState::all_open(window.size());
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const std::string_view id =
        spec.substr(start, comma == std::string_view::npos ? comma : comma - start);
    const bool ok = id.size() == 3 && id[1] == '_' &&
                    (id[0] == 'a' || id[0] == 'b') &&
                    (id[2] == 'c' || id[2] == 'd');
    if (!ok) {
      throw ValidationError("slit id must be one of a_c, a_d, b_c, b_d; got '" +
                            std::string(id) + "'");
    }
    const Player owner = id[0] == 'a' ? Player::Alice : Player::Bob;
    const Strategy label = id[2] == 'c' ? Strategy::Cooperate : Strategy::Defect;
    const auto index = window.find(owner, label);
    if (!index) {
      throw ValidationError("slit '" + std::string(id) +
                            "' is not part of this aperture");
    }
    state.open[*index] = true;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return state;
}

GameOutcome play_round(StrategyProfile profile, const ApparatusConfig& config) {
  config.validate();
  const GameParameters& params = config.params;
  GameOutcome out{profile, classical_payoff(profile, params.coeffs()),
                  Regime::ClassicalUnresolved, std::nullopt, 0.0};
  if (params.lambda() == 0.0) return out;

  const RoundObservation obs = observe_round(profile, config);
  out.measurement = obs.measurement;
  if (!obs.measurement.resolved) return out;

  out.regime = Regime::QuantumResolved;
  const PayoffPair analytic = quantum_payoff(profile, params);
  if (config.payoff_mode == PayoffMode::Direct) {
    out.payoffs = analytic;
    return out;
  }
  // Measured: the arbiter knows lambda, infers d from the spacing and
  // prices the focal player; the other player is priced by relabeling.
  const double delta_u = *obs.measurement.delta_u;
  const double focal = *obs.measurement.d_inferred + params.k() * delta_u;
  out.payoffs = {focal, analytic.bob};
  out.payoff_discrepancy = std::abs(focal - analytic.alice);
  return out;
}

Classification classify_regime(const GameParameters& params) {
  const bool coop = is_symmetric_ne(Strategy::Cooperate, params);
  const bool defect = is_symmetric_ne(Strategy::Defect, params);
  if (coop && defect) return Classification::Both;
  if (coop) return Classification::CooperationNE;
  if (defect) return Classification::DefectionNE;
  return Classification::NoPureSymmetricNE;
}

namespace {

// Boundary of a monotone predicate on [inside, outside], where it holds at
// `inside` and fails at `outside`.
template <typename Pred>
double bisect_boundary(double inside, double outside, double tol, Pred holds) {
  while (std::abs(outside - inside) > tol) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    if (holds(mid)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return 0.5 * (inside + outside);
}

}  // namespace

SweepResult sweep_lambda(double lo, double hi, int steps,
                         const PayoffCoefficients& coeffs, double k) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || !(lo < hi)) {
    throw ValidationError("wavelength range needs 0 <= lo < hi");
  }
  if (steps < 2) throw ValidationError("sweep needs at least 2 steps");
  const GameParameters base(coeffs, lo, k);

  SweepResult out;
  out.analytic_low = defection_threshold(coeffs, k);
  out.analytic_high = cooperation_threshold(coeffs, k);
  out.lambda_grid.resize(static_cast<std::size_t>(steps));
  out.classification.resize(static_cast<std::size_t>(steps));
  const double span = hi - lo;
  for (int i = 0; i < steps; ++i) {
    const double lambda =
        i == steps - 1 ? hi : lo + span * static_cast<double>(i) / (steps - 1);
    out.lambda_grid[i] = lambda;
    out.classification[i] = classify_regime(base.with_lambda(lambda));
  }

  const double tol = 1e-9 * span;
  auto holds = [&](Strategy s) {
    return [&base, s](double lambda) {
      return is_symmetric_ne(s, base.with_lambda(lambda));
    };
  };
  for (std::size_t i = 0; i + 1 < out.lambda_grid.size(); ++i) {
    const double a = out.lambda_grid[i];
    const double b = out.lambda_grid[i + 1];
    const auto defect_here = holds(Strategy::Defect);
    if (!out.detected.lambda_low && defect_here(a) != defect_here(b)) {
      out.detected.lambda_low = defect_here(a)
                                    ? bisect_boundary(a, b, tol, defect_here)
                                    : bisect_boundary(b, a, tol, defect_here);
    }
    const auto coop_here = holds(Strategy::Cooperate);
    if (!out.detected.lambda_high && coop_here(a) != coop_here(b)) {
      out.detected.lambda_high = coop_here(b)
                                     ? bisect_boundary(b, a, tol, coop_here)
                                     : bisect_boundary(a, b, tol, coop_here);
    }
  }
  return out;
}

}  // namespace fringe
