#pragma once

// Placing the four slits on one line so that every cross-player pair sits at
// the matching payoff separation, or falling back to a per-round two-slit
// aperture when no such line exists.

#include <array>
#include <string>
#include <utility>

#include "fringe/game.hpp"
#include "fringe/wave_optics.hpp"

namespace fringe {

struct SlitPositions {
  double alice_c = 0.0;
  double alice_d = 0.0;
  double bob_c = 0.0;
  double bob_d = 0.0;

  double alice(Strategy s) const {
    return s == Strategy::Cooperate ? alice_c : alice_d;
  }
  double bob(Strategy s) const {
    return s == Strategy::Cooperate ? bob_c : bob_d;
  }
};

/// Signs (+1/-1) of the four signed separations used to place the slits:
///   bob_c   = alice_c + sign[0] * r
///   bob_d   = alice_c + sign[1] * s
///   alice_d = bob_c   + sign[2] * t
///   alice_d = bob_d   + sign[3] * p
using SignPattern = std::array<int, 4>;

struct LayoutSolution {
  bool feasible = false;
  /// Exact layout when feasible, otherwise the least-squares compromise.
  SlitPositions positions;
  /// Largest | |x_a - x_b| - target | over the four cross pairs.
  double residual = 0.0;
  SignPattern sign_pattern{1, 1, 1, 1};
};

inline constexpr double kLayoutTolerance = 1e-12;

/// Largest separation error of `positions` against the payoff matrix.
double layout_residual(const SlitPositions& positions,
                       const PayoffCoefficients& coeffs);

/// Enumerates the sign patterns with Alice's C slit pinned at 0.
LayoutSolution solve_layout(const PayoffCoefficients& coeffs);

/// Two open slits at -d/2 (Alice's choice) and +d/2 (Bob's choice).
std::pair<ApertureWindow, SlitState> abstract_window_for_profile(
    StrategyProfile profile, const PayoffCoefficients& coeffs,
    double slit_width);

/// All four slits of a feasible layout, with the profile's pair open.
std::pair<ApertureWindow, SlitState> fixed_window_for_profile(
    StrategyProfile profile, const LayoutSolution& layout, double slit_width);

/// Smallest distance between any two of the four slits.
double min_slit_spacing(const SlitPositions& positions);

}  // namespace fringe
