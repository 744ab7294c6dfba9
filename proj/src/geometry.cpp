#include "fringe/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fringe {

namespace {

// Least-squares placement for one sign pattern. The four signed equations
// close a cycle (bob_c - alice_c) - (bob_d - alice_c) - (bob_c - alice_d)
// + (bob_d - alice_d) = 0, so the misfit of the cycle is spread equally over
// the four measurements.
SlitPositions place(const PayoffCoefficients& c, const SignPattern& sign) {
  const double m_r = sign[0] * c.r();
  const double m_s = sign[1] * c.s();
  const double m_t = sign[2] * c.t();
  const double m_p = sign[3] * c.p();
  // alice_d - bob_c = m_t, alice_d - bob_d = m_p
  const double misfit = m_r - m_s + m_t - m_p;
  const double q = misfit / 4.0;
  SlitPositions pos;
  pos.alice_c = 0.0;
  pos.bob_c = m_r - q;
  pos.bob_d = m_s + q;
  pos.alice_d = 0.5 * ((pos.bob_c + m_t - q) + (pos.bob_d + m_p + q));
  return pos;
}

}  // namespace

double layout_residual(const SlitPositions& pos,
                       const PayoffCoefficients& coeffs) {
  double worst = 0.0;
  for (const auto& profile : kAllProfiles) {
    const double gap = std::abs(pos.alice(profile.alice) - pos.bob(profile.bob));
    const double want = separation_for_profile(profile, coeffs);
    worst = std::max(worst, std::abs(gap - want));
  }
  return worst;
}

LayoutSolution solve_layout(const PayoffCoefficients& coeffs) {
  LayoutSolution best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int bits = 0; bits < 16; ++bits) {
    const SignPattern sign{bits & 1 ? -1 : 1, bits & 2 ? -1 : 1,
                           bits & 4 ? -1 : 1, bits & 8 ? -1 : 1};
    const SlitPositions pos = place(coeffs, sign);
    const double residual = layout_residual(pos, coeffs);
    if (residual < best.residual) {
      best.positions = pos;
      best.residual = residual;
      best.sign_pattern = sign;
    }
  }
  best.feasible = best.residual <= kLayoutTolerance;
  return best;
}

std::pair<ApertureWindow, SlitState> abstract_window_for_profile(
    StrategyProfile profile, const PayoffCoefficients& coeffs,
    double slit_width) {
  const double d = separation_for_profile(profile, coeffs);
  if (!std::isfinite(slit_width) || !(slit_width > 0.0) ||
      !(slit_width < 0.5 * d)) {
    throw ValidationError("slit width must be positive and below d/2 (d = " +
                          std::to_string(d) + ")");
  }
  ApertureWindow window({
      Slit{-0.5 * d, slit_width, Player::Alice, profile.alice},
      Slit{0.5 * d, slit_width, Player::Bob, profile.bob},
  });
  return {std::move(window), SlitState::all_open(2)};
}

double min_slit_spacing(const SlitPositions& pos) {
  const std::array<double, 4> x{pos.alice_c, pos.alice_d, pos.bob_c, pos.bob_d};
  double out = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      out = std::min(out, std::abs(x[i] - x[j]));
    }
  }
  return out;
}

std::pair<ApertureWindow, SlitState> fixed_window_for_profile(
    StrategyProfile profile, const LayoutSolution& layout, double slit_width) {
  if (!layout.feasible) {
    throw ValidationError("no fixed four-slit window realizes these payoffs");
  }
  const SlitPositions& pos = layout.positions;
  if (!std::isfinite(slit_width) || !(slit_width > 0.0) ||
      !(slit_width < 0.5 * min_slit_spacing(pos))) {
    throw ValidationError(
        "slit width must be positive and below half the closest slit spacing");
  }
  using enum Strategy;
  ApertureWindow window({
      Slit{pos.alice_c, slit_width, Player::Alice, Cooperate},
      Slit{pos.alice_d, slit_width, Player::Alice, Defect},
      Slit{pos.bob_c, slit_width, Player::Bob, Cooperate},
      Slit{pos.bob_d, slit_width, Player::Bob, Defect},
  });
  SlitState state{{profile.alice == Cooperate, profile.alice == Defect,
                   profile.bob == Cooperate, profile.bob == Defect}};
  return {std::move(window), std::move(state)};
}

}  // namespace fringe
