#include "fringe/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fringe {

double canonical(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

Json number_or_null(const std::optional<double>& v) {
  return v ? Json(canonical(*v)) : Json(nullptr);
}

Json profile_payoffs(const GameParameters& params) {
  Json out = Json::object();
  for (const auto& profile : kAllProfiles) {
    out[std::string(to_string(profile.alice)) + std::string(to_string(profile.bob))] =
        canonical(focal_payoff(profile, params));
  }
  return out;
}

}  // namespace

Json to_json(const StrategyProfile& profile) {
  return {{"alice", std::string(to_string(profile.alice))},
          {"bob", std::string(to_string(profile.bob))}};
}

Json to_json(const FringeMeasurement& m) {
  return {{"delta_u", number_or_null(m.delta_u)},
          {"d_inferred", number_or_null(m.d_inferred)},
          {"resolved", m.resolved},
          {"peaks_used", m.peaks_used}};
}

Json to_json(const GameOutcome& outcome) {
  return {
      {"profile", to_json(outcome.profile)},
      {"payoffs",
       Json::array({canonical(outcome.payoffs.alice),
                    canonical(outcome.payoffs.bob)})},
      {"regime", std::string(to_string(outcome.regime))},
      {"measurement",
       outcome.measurement ? to_json(*outcome.measurement) : Json(nullptr)},
      {"payoff_discrepancy", canonical(outcome.payoff_discrepancy)},
  };
}

Json to_json(const LayoutSolution& layout) {
  const SlitPositions& p = layout.positions;
  return {
      {"feasible", layout.feasible},
      {"positions",
       {{"alice_c", canonical(p.alice_c)},
        {"alice_d", canonical(p.alice_d)},
        {"bob_c", canonical(p.bob_c)},
        {"bob_d", canonical(p.bob_d)}}},
      {"residual", canonical(layout.residual)},
      {"sign_pattern", layout.sign_pattern},
  };
}

Json to_json(const MixedEquilibrium& mixed) {
  return {{"cooperate_probability", number_or_null(mixed.cooperate_probability)},
          {"degenerate", mixed.degenerate}};
}

Json sweep_json(const SweepResult& sweep, const PayoffCoefficients& coeffs,
                double k) {
  Json points = Json::array();
  for (std::size_t i = 0; i < sweep.lambda_grid.size(); ++i) {
    const GameParameters params(coeffs, sweep.lambda_grid[i], k);
    points.push_back({{"lambda", canonical(sweep.lambda_grid[i])},
                      {"classification",
                       std::string(to_string(sweep.classification[i]))},
                      {"payoffs", profile_payoffs(params)}});
  }
  return {
      {"points", std::move(points)},
      {"thresholds",
       {{"detected",
         {{"lambda_low", number_or_null(sweep.detected.lambda_low)},
          {"lambda_high", number_or_null(sweep.detected.lambda_high)}}},
        {"analytic",
         {{"lambda_low", canonical(sweep.analytic_low)},
          {"lambda_high", canonical(sweep.analytic_high)}}}}},
  };
}

std::string sweep_csv(const SweepResult& sweep,
                      const PayoffCoefficients& coeffs, double k) {
  using enum Strategy;
  std::string out =
      "lambda,classification,payoff_CC,payoff_DD,payoff_CD_focal,"
      "payoff_DC_focal\n";
  for (std::size_t i = 0; i < sweep.lambda_grid.size(); ++i) {
    const GameParameters params(coeffs, sweep.lambda_grid[i], k);
    out += format_number(sweep.lambda_grid[i]);
    out += ',';
    out += to_string(sweep.classification[i]);
    for (const StrategyProfile profile :
         {StrategyProfile{Cooperate, Cooperate}, StrategyProfile{Defect, Defect},
          StrategyProfile{Cooperate, Defect}, StrategyProfile{Defect, Cooperate}}) {
      out += ',';
      out += format_number(focal_payoff(profile, params));
    }
    out += '\n';
  }
  return out;
}

std::string pattern_csv(const DiffractionPattern& pattern) {
  std::string out = "u,intensity\n";
  out.reserve(out.size() + pattern.intensity.size() * 40);
  for (std::size_t i = 0; i < pattern.intensity.size(); ++i) {
    out += format_number(pattern.grid.at(i));
    out += ',';
    out += format_number(pattern.intensity[i]);
    out += '\n';
  }
  return out;
}

Json pattern_json(const RoundObservation& obs) {
  Json u = Json::array();
  Json intensity = Json::array();
  for (std::size_t i = 0; i < obs.pattern.intensity.size(); ++i) {
    u.push_back(canonical(obs.pattern.grid.at(i)));
    intensity.push_back(canonical(obs.pattern.intensity[i]));
  }
  Json peaks = Json::array();
  for (const Peak& p : obs.peaks) {
    peaks.push_back({{"u", canonical(p.position)},
                     {"height", canonical(p.height)}});
  }
  Json slits = Json::array();
  const auto list = obs.window.slits();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Slit& s = list[i];
    std::string owner = s.owner == Player::Alice ? "alice"
                        : s.owner == Player::Bob ? "bob"
                                                 : "none";
    slits.push_back({{"center", canonical(s.center)},
                     {"width", canonical(s.width)},
                     {"owner", owner},
                     {"label", s.label ? Json(std::string(to_string(*s.label)))
                                       : Json(nullptr)},
                     {"open", static_cast<bool>(obs.state.open[i])}});
  }
  return {{"u", std::move(u)},
          {"intensity", std::move(intensity)},
          {"peaks", std::move(peaks)},
          {"slits", std::move(slits)},
          {"all_closed", obs.pattern.all_closed},
          {"measurement", to_json(obs.measurement)}};
}

Json equilibrium_json(const GameParameters& params) {
  Json pure = Json::array();
  for (const auto& profile : pure_ne_profiles(params)) {
    pure.push_back(to_string(profile));
  }
  return {{"lambda", canonical(params.lambda())},
          {"classification",
           std::string(to_string(classify_regime(params)))},
          {"pure_ne_profiles", std::move(pure)}};
}

}  // namespace fringe
