#pragma once

// Canonical JSON and CSV renderings shared by the CLI and the service.
// Keys are sorted and every float is rounded to 12 significant digits, so
// identical inputs give byte-identical output on every path.

#include <string>

#include <nlohmann/json.hpp>

#include "fringe/arbiter.hpp"
#include "fringe/geometry.hpp"
#include "fringe/wave_optics.hpp"

namespace fringe {

using Json = nlohmann::json;

/// Rounds to 12 significant digits (the shortest repr within that budget).
double canonical(double value);
/// "%.12g"
std::string format_number(double value);

/// Pretty-printed with a trailing newline.
std::string render(const Json& doc);

Json to_json(const StrategyProfile& profile);
Json to_json(const FringeMeasurement& measurement);
Json to_json(const GameOutcome& outcome);
Json to_json(const LayoutSolution& layout);
Json to_json(const MixedEquilibrium& mixed);

/// Sweep with per-wavelength classification, payoffs and a thresholds block.
Json sweep_json(const SweepResult& sweep, const PayoffCoefficients& coeffs,
                double k);

/// Columns: lambda,classification,payoff_CC,payoff_DD,payoff_CD_focal,
/// payoff_DC_focal. One row per grid point after the header.
std::string sweep_csv(const SweepResult& sweep,
                      const PayoffCoefficients& coeffs, double k);

/// Columns: u,intensity.
std::string pattern_csv(const DiffractionPattern& pattern);

/// Arrays for plotting: u, intensity, detected peaks and the measurement.
Json pattern_json(const RoundObservation& observation);

/// Regime classification of one wavelength with the pure equilibria.
Json equilibrium_json(const GameParameters& params);

}  // namespace fringe
