#pragma once

// de Broglie wavelengths and the arbiter's choice of scaling factor.
//
// Game lengths are converted to metres through an explicit UnitScale
// (sigma metres per game unit). Momentum is non-relativistic, p = m v.

#include <optional>
#include <string>

#include "fringe/game.hpp"

namespace fringe {

struct PhysicalConstants {
  /// Planck constant, J s (exact SI value).
  double h = 6.62607015e-34;
  /// Electron rest mass, kg (CODATA 2018).
  double m_e = 9.1093837015e-31;
  /// Speed of light, m/s.
  double c = 299792458.0;
};

inline constexpr PhysicalConstants kConstants{};

class Particle {
 public:
  Particle(double mass, double velocity);

  double mass() const { return mass_; }
  double velocity() const { return velocity_; }
  double momentum() const { return mass_ * velocity_; }

 private:
  double mass_;
  double velocity_;
};

class UnitScale {
 public:
  explicit UnitScale(double sigma = 1.0);
  double sigma() const { return sigma_; }

 private:
  double sigma_;
};

/// h / (m v), metres.
double de_broglie_wavelength(const Particle& particle,
                             const PhysicalConstants& constants = kConstants);

/// Wavelength in game units: de_broglie_wavelength / sigma.
double game_wavelength(const Particle& particle, const UnitScale& scale,
                       const PhysicalConstants& constants = kConstants);

/// Largest speed for which the game wavelength still reaches rt/k:
/// h k / (m sigma r t).
double velocity_bound_for_cooperation(
    const PayoffCoefficients& coeffs, double k, const UnitScale& scale,
    double mass, const PhysicalConstants& constants = kConstants);

/// Inverse of velocity_bound_for_cooperation in k.
double scaling_factor_for_velocity(
    double target_velocity, const PayoffCoefficients& coeffs,
    const UnitScale& scale, double mass,
    const PhysicalConstants& constants = kConstants);

/// A warning message when v > 0.01 c, where p = m v stops being accurate.
std::optional<std::string> relativistic_warning(
    double velocity, const PhysicalConstants& constants = kConstants);

}  // namespace fringe
