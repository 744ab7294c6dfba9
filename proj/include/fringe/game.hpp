#pragma once

// Prisoners' Dilemma played with slit separations as payoffs.
//
// The four classical coefficients t > r > p > s > 0 double as the
// separations between the two open slits. With a nonzero wavelength the
// arbiter adds a fringe-spacing term, so the focal payoff becomes
//
//     P(s1, s2) = d + k * lambda / d
//
// where d is the separation selected by the profile (s1, s2).

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fringe {

/// Raised for any input that violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Strategy { Cooperate, Defect };

constexpr Strategy alternative(Strategy s) {
  return s == Strategy::Cooperate ? Strategy::Defect : Strategy::Cooperate;
}

/// "C" or "D".
std::string_view to_string(Strategy s);
/// Accepts "C"/"D" (case-insensitive) and the full names.
Strategy parse_strategy(std::string_view text);

struct StrategyProfile {
  Strategy alice;
  Strategy bob;

  /// The same round seen from Bob's side.
  constexpr StrategyProfile swapped() const { return {bob, alice}; }

  friend constexpr auto operator<=>(const StrategyProfile&,
                                    const StrategyProfile&) = default;
};

inline constexpr std::array<StrategyProfile, 4> kAllProfiles{{
    {Strategy::Cooperate, Strategy::Cooperate},
    {Strategy::Cooperate, Strategy::Defect},
    {Strategy::Defect, Strategy::Cooperate},
    {Strategy::Defect, Strategy::Defect},
}};

/// "C,D" style label.
std::string to_string(const StrategyProfile& profile);
StrategyProfile parse_profile(std::string_view text);

/// The classical PD coefficients. Construction enforces t > r > p > s > 0.
class PayoffCoefficients {
 public:
  PayoffCoefficients(double t, double r, double p, double s);

  double t() const { return t_; }
  double r() const { return r_; }
  double p() const { return p_; }
  double s() const { return s_; }

  friend bool operator==(const PayoffCoefficients&,
                         const PayoffCoefficients&) = default;

 private:
  double t_;
  double r_;
  double p_;
  double s_;
};

class GameParameters {
 public:
  GameParameters(PayoffCoefficients coeffs, double lambda, double k);

  const PayoffCoefficients& coeffs() const { return coeffs_; }
  double lambda() const { return lambda_; }
  double k() const { return k_; }

  GameParameters with_lambda(double lambda) const {
    return {coeffs_, lambda, k_};
  }

 private:
  PayoffCoefficients coeffs_;
  double lambda_;
  double k_;
};

struct PayoffPair {
  double alice;
  double bob;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

/// Separation of the open slit pair, labelled from the focal (first) player:
/// (C,C)->r, (C,D)->s, (D,C)->t, (D,D)->p.
double separation_for_profile(StrategyProfile profile,
                              const PayoffCoefficients& coeffs);

/// d + k*lambda/d for the focal player of `profile`.
double focal_payoff(StrategyProfile profile, const GameParameters& params);

/// Bob's entry is the focal payoff of the swapped profile.
PayoffPair quantum_payoff(StrategyProfile profile, const GameParameters& params);

/// The classical matrix entries, i.e. quantum_payoff at lambda = 0.
PayoffPair classical_payoff(StrategyProfile profile,
                            const PayoffCoefficients& coeffs);

/// P(s*, s*) - P(s, s*) for the single alternative s.
double equilibrium_margin(Strategy candidate, const GameParameters& params);

/// Weak inequality: boundary wavelengths count as equilibria. Differences
/// within a few ulps of the payoff magnitude are treated as zero.
bool is_symmetric_ne(Strategy candidate, const GameParameters& params);

/// Exhaustive best-response check over all four profiles.
std::vector<StrategyProfile> pure_ne_profiles(const GameParameters& params);

/// sp/k: defection stays a symmetric equilibrium up to this wavelength.
double defection_threshold(const PayoffCoefficients& coeffs, double k);
/// rt/k: cooperation becomes a symmetric equilibrium from this wavelength.
double cooperation_threshold(const PayoffCoefficients& coeffs, double k);

struct MixedEquilibrium {
  /// Probability with which each player cooperates.
  std::optional<double> cooperate_probability;
  bool degenerate = false;
};

/// Symmetric mixed equilibrium by indifference. Only reported when neither
/// pure strategy is a symmetric equilibrium.
MixedEquilibrium symmetric_mixed_ne(const GameParameters& params);

/// True when `a` exceeds `b` by more than floating-point noise.
bool strictly_greater(double a, double b);

}  // namespace fringe
