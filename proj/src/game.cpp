#include "fringe/game.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace fringe {

namespace {

// Relative slack used when comparing payoffs. The threshold wavelengths
// rt/k and sp/k are rarely representable, so an exact comparison would
// flip a boundary point on rounding noise alone.
constexpr double kPayoffRelTol = 1e-12;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view to_string(Strategy s) {
  return s == Strategy::Cooperate ? "C" : "D";
}

Strategy parse_strategy(std::string_view text) {
  const auto t = lower(text);
  if (t == "c" || t == "cooperate") return Strategy::Cooperate;
  if (t == "d" || t == "defect") return Strategy::Defect;
  throw ValidationError("strategy must be C or D, got '" + std::string(text) +
                        "'");
}

std::string to_string(const StrategyProfile& profile) {
  return std::string(to_string(profile.alice)) + "," +
         std::string(to_string(profile.bob));
}

StrategyProfile parse_profile(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ValidationError("profile must look like 'C,D', got '" +
                          std::string(text) + "'");
  }
  return {parse_strategy(text.substr(0, comma)),
          parse_strategy(text.substr(comma + 1))};
}

PayoffCoefficients::PayoffCoefficients(double t, double r, double p, double s)
    : t_(t), r_(r), p_(p), s_(s) {
  for (double v : {t, r, p, s}) {
    if (!std::isfinite(v)) {
      throw ValidationError("payoff coefficients must be finite");
    }
  }
  if (!(s > 0.0)) {
    throw ValidationError("payoff coefficients must be positive (s > 0)");
  }
  if (!(t > r && r > p && p > s)) {
    throw ValidationError(
        "payoff coefficients violate the ordering t > r > p > s");
  }
}

GameParameters::GameParameters(PayoffCoefficients coeffs, double lambda,
                               double k)
    : coeffs_(coeffs), lambda_(lambda), k_(k) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw ValidationError("wavelength must be finite and >= 0");
  }
  if (!std::isfinite(k) || !(k > 0.0)) {
    throw ValidationError("scaling factor k must be finite and > 0");
  }
}

double separation_for_profile(StrategyProfile profile,
                              const PayoffCoefficients& coeffs) {
  using enum Strategy;
  if (profile.alice == Cooperate) {
    return profile.bob == Cooperate ? coeffs.r() : coeffs.s();
  }
  return profile.bob == Cooperate ? coeffs.t() : coeffs.p();
}

double focal_payoff(StrategyProfile profile, const GameParameters& params) {
  const double d = separation_for_profile(profile, params.coeffs());
  return d + params.k() * params.lambda() / d;
}

PayoffPair quantum_payoff(StrategyProfile profile,
                          const GameParameters& params) {
  return {focal_payoff(profile, params),
          focal_payoff(profile.swapped(), params)};
}

PayoffPair classical_payoff(StrategyProfile profile,
                            const PayoffCoefficients& coeffs) {
  return {separation_for_profile(profile, coeffs),
          separation_for_profile(profile.swapped(), coeffs)};
}

double equilibrium_margin(Strategy candidate, const GameParameters& params) {
  const Strategy other = alternative(candidate);
  return focal_payoff({candidate, candidate}, params) -
         focal_payoff({other, candidate}, params);
}

bool strictly_greater(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return a - b > kPayoffRelTol * scale;
}

bool is_symmetric_ne(Strategy candidate, const GameParameters& params) {
  const Strategy other = alternative(candidate);
  return !strictly_greater(focal_payoff({other, candidate}, params),
                           focal_payoff({candidate, candidate}, params));
}

std::vector<StrategyProfile> pure_ne_profiles(const GameParameters& params) {
  std::vector<StrategyProfile> out;
  for (const auto& profile : kAllProfiles) {
    const PayoffPair here = quantum_payoff(profile, params);
    const StrategyProfile alice_dev{alternative(profile.alice), profile.bob};
    const StrategyProfile bob_dev{profile.alice, alternative(profile.bob)};
    const bool alice_gains =
        strictly_greater(quantum_payoff(alice_dev, params).alice, here.alice);
    const bool bob_gains =
        strictly_greater(quantum_payoff(bob_dev, params).bob, here.bob);
    if (!alice_gains && !bob_gains) out.push_back(profile);
  }
  return out;
}

double defection_threshold(const PayoffCoefficients& coeffs, double k) {
  return coeffs.s() * coeffs.p() / k;
}

double cooperation_threshold(const PayoffCoefficients& coeffs, double k) {
  return coeffs.r() * coeffs.t() / k;
}

MixedEquilibrium symmetric_mixed_ne(const GameParameters& params) {
  using enum Strategy;
  if (is_symmetric_ne(Cooperate, params) || is_symmetric_ne(Defect, params)) {
    return {};
  }
  // Opponent cooperates with probability q; the focal player is indifferent
  // when q (P(C,C) - P(D,C)) = (1 - q) (P(D,D) - P(C,D)).
  const double defect_gap = focal_payoff({Defect, Defect}, params) -
                            focal_payoff({Cooperate, Defect}, params);
  const double coop_gap = focal_payoff({Cooperate, Cooperate}, params) -
                          focal_payoff({Defect, Cooperate}, params);
  const double denom = defect_gap + coop_gap;
  if (denom == 0.0) return {std::nullopt, true};
  const double q = defect_gap / denom;
  if (!(q > 0.0 && q < 1.0)) return {};
  return {q, false};
}

}  // namespace fringe
