#pragma once

// The arbiter runs one round end to end: build the aperture for the players'
// choices, simulate the screen, read the fringe spacing and turn it into
// payoffs. It also classifies wavelengths into equilibrium regimes and
// sweeps wavelength ranges for the regime boundaries.

#include <optional>
#include <string_view>
#include <vector>

#include "fringe/game.hpp"
#include "fringe/geometry.hpp"
#include "fringe/wave_optics.hpp"

namespace fringe {

enum class LayoutMode { FixedWindow, Abstract };
enum class PayoffMode { Direct, Measured };

std::string_view to_string(LayoutMode mode);
std::string_view to_string(PayoffMode mode);
LayoutMode parse_layout_mode(std::string_view text);
PayoffMode parse_payoff_mode(std::string_view text);

struct ApparatusConfig {
  GameParameters params{PayoffCoefficients{5, 3, 2, 1}, 0.2, 100.0};
  LayoutMode layout_mode = LayoutMode::Abstract;
  /// Absent: 1/20 of the closest slit spacing of the chosen window.
  std::optional<double> slit_width;
  /// Absent: default_grid() for the open pair of each round.
  std::optional<ScreenGrid> grid;
  Detector detector;
  PayoffMode payoff_mode = PayoffMode::Direct;

  void validate() const;
};

enum class Regime { ClassicalUnresolved, QuantumResolved };
std::string_view to_string(Regime regime);

struct GameOutcome {
  StrategyProfile profile;
  PayoffPair payoffs;
  Regime regime = Regime::ClassicalUnresolved;
  std::optional<FringeMeasurement> measurement;
  double payoff_discrepancy = 0.0;
};

/// Everything the arbiter sees on the screen for one round.
struct RoundObservation {
  ApertureWindow window;
  SlitState state;
  DiffractionPattern pattern;
  std::vector<Peak> peaks;
  FringeMeasurement measurement;
};

/// Aperture for `profile` under the configured layout mode. Fixed-window
/// mode falls back to the abstract two-slit aperture when the coefficients
/// admit no collinear layout.
std::pair<ApertureWindow, SlitState> aperture_for_profile(
    StrategyProfile profile, const ApparatusConfig& config);

/// Simulates and measures the screen. Requires lambda > 0.
RoundObservation observe_round(StrategyProfile profile,
                               const ApparatusConfig& config);

/// Same as observe_round but with an explicit slit state on the profile's
/// aperture (used to close or open individual slits).
RoundObservation observe_aperture(const ApertureWindow& window,
                                  const SlitState& state,
                                  const ApparatusConfig& config);

/// Slit state from a list like "a_c,b_d" (owner a/b, label c/d), or
/// "none" / "all". Naming a slit the window does not have is an error.
SlitState parse_open_override(const ApertureWindow& window,
                              std::string_view spec);

GameOutcome play_round(StrategyProfile profile, const ApparatusConfig& config);

enum class Classification {
  DefectionNE,
  CooperationNE,
  Both,
  NoPureSymmetricNE,
};
std::string_view to_string(Classification c);

Classification classify_regime(const GameParameters& params);

struct ThresholdPair {
  std::optional<double> lambda_low;
  std::optional<double> lambda_high;
};

struct SweepResult {
  std::vector<double> lambda_grid;
  std::vector<Classification> classification;
  ThresholdPair detected;
  /// sp/k and rt/k.
  double analytic_low = 0.0;
  double analytic_high = 0.0;
};

/// Classifies `steps` evenly spaced wavelengths over [lo, hi] and bisects
/// each classification change down to 1e-9 (hi - lo).
SweepResult sweep_lambda(double lo, double hi, int steps,
                         const PayoffCoefficients& coeffs, double k);

}  // namespace fringe
