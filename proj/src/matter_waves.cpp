#include "fringe/matter_waves.hpp"

#include <cmath>
#include <cstdio>

namespace fringe {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ValidationError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

Particle::Particle(double mass, double velocity)
    : mass_(mass), velocity_(velocity) {
  require_positive(mass, "mass");
  require_positive(velocity, "velocity");
}

UnitScale::UnitScale(double sigma) : sigma_(sigma) {
  require_positive(sigma, "unit scale sigma");
}

double de_broglie_wavelength(const Particle& particle,
                             const PhysicalConstants& constants) {
  return constants.h / particle.momentum();
}

double game_wavelength(const Particle& particle, const UnitScale& scale,
                       const PhysicalConstants& constants) {
  return de_broglie_wavelength(particle, constants) / scale.sigma();
}

double velocity_bound_for_cooperation(const PayoffCoefficients& coeffs,
                                      double k, const UnitScale& scale,
                                      double mass,
                                      const PhysicalConstants& constants) {
  require_positive(k, "scaling factor k");
  require_positive(mass, "mass");
  return constants.h * k /
         (mass * scale.sigma() * coeffs.r() * coeffs.t());
}

double scaling_factor_for_velocity(double target_velocity,
                                   const PayoffCoefficients& coeffs,
                                   const UnitScale& scale, double mass,
                                   const PhysicalConstants& constants) {
  require_positive(target_velocity, "target velocity");
  require_positive(mass, "mass");
  return mass * scale.sigma() * coeffs.r() * coeffs.t() * target_velocity /
         constants.h;
}

std::optional<std::string> relativistic_warning(
    double velocity, const PhysicalConstants& constants) {
  if (velocity <= 0.01 * constants.c) return std::nullopt;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "velocity %.6g m/s exceeds 1%% of c; non-relativistic "
                "momentum p = m v is inaccurate",
                velocity);
  return std::string(buf);
}

}  // namespace fringe
