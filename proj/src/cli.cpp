#include "fringe/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fringe/config.hpp"
#include "fringe/service.hpp"

namespace fringe {

namespace {

struct Overrides {
  std::string config_path;
  std::string coeffs;
  std::optional<double> k;
  std::optional<double> lambda;
  std::optional<double> velocity;
  std::optional<double> mass;
  std::optional<double> sigma;
  std::string payoff_mode;
  std::string layout_mode;
  std::optional<double> slit_width;
  std::optional<double> bin_width;
  std::string output;
};

std::optional<std::pair<double, double>> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    const double lo = std::stod(a, &used);
    if (used != a.size()) return std::nullopt;
    const double hi = std::stod(b, &used);
    if (used != b.size()) return std::nullopt;
    return std::pair{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

RunConfig resolve_config(const Overrides& o, std::ostream& err) {
  RunConfig cfg;
  if (!o.config_path.empty()) {
    cfg = load_run_config(o.config_path);
  } else if (auto env = config_path_from_env()) {
    cfg = load_run_config(*env);
  }

  ApparatusConfig& app = cfg.apparatus;
  if (o.mass) {
    if (!(*o.mass > 0.0)) throw ValidationError("mass must be positive");
    cfg.mass = *o.mass;
  }
  if (o.sigma) cfg.sigma = UnitScale(*o.sigma).sigma();

  PayoffCoefficients coeffs = app.params.coeffs();
  double k = app.params.k();
  double lambda = app.params.lambda();
  if (!o.coeffs.empty()) coeffs = parse_coefficients(o.coeffs);
  if (o.k) k = *o.k;
  if (o.lambda) lambda = *o.lambda;
  if (o.velocity) {
    const Particle particle(cfg.mass, *o.velocity);
    if (auto warning = relativistic_warning(*o.velocity)) {
      err << "warning: " << *warning << "\n";
    }
    lambda = game_wavelength(particle, UnitScale(cfg.sigma));
  }
  app.params = GameParameters(coeffs, lambda, k);

  if (!o.payoff_mode.empty()) app.payoff_mode = parse_payoff_mode(o.payoff_mode);
  if (!o.layout_mode.empty()) app.layout_mode = parse_layout_mode(o.layout_mode);
  if (o.slit_width) app.slit_width = *o.slit_width;
  if (o.bin_width) app.detector.bin_width = *o.bin_width;
  app.validate();
  if (!o.output.empty()) cfg.output = o.output;
  return cfg;
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.output) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output, std::ios::binary);
  if (!file) {
    throw ValidationError("cannot write output file '" + *cfg.output + "'");
  }
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Prisoners' Dilemma played on a multi-slit diffraction table",
               "fringe_arena"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path,
                 std::string("Key-value config file (default: $") +
                     kConfigEnvVar + ")");
  app.add_option("--coeffs", o.coeffs, "Payoff coefficients t,r,p,s");
  app.add_option("--k", o.k, "Scaling factor k");
  auto* lambda_opt = app.add_option("--lambda", o.lambda, "Wavelength (game units)");
  app.add_option("--velocity", o.velocity,
                 "Particle speed in m/s; sets lambda = h/(m v)/sigma")
      ->excludes(lambda_opt);
  app.add_option("--mass", o.mass, "Particle mass in kg (default: electron)");
  app.add_option("--sigma", o.sigma, "Metres per game length unit");
  app.add_option("--mode", o.payoff_mode, "Payoff mode")
      ->check(CLI::IsMember({"direct", "measured"}));
  app.add_option("--layout", o.layout_mode, "Aperture layout")
      ->check(CLI::IsMember({"abstract", "fixed_window"}));
  app.add_option("--slit-width", o.slit_width, "Slit width (game units)");
  app.add_option("--bin-width", o.bin_width, "Detector bin width in u");
  app.add_option("-o,--output", o.output, "Write the result to this file");

  auto* round = app.add_subcommand("round", "Play one round and print the outcome as JSON");
  std::string alice;
  std::string bob;
  round->add_option("--alice", alice, "Alice's move")
      ->required()
      ->check(CLI::IsMember({"C", "D"}));
  round->add_option("--bob", bob, "Bob's move")
      ->required()
      ->check(CLI::IsMember({"C", "D"}));

  auto* sweep = app.add_subcommand("sweep", "Classify equilibria over a wavelength range");
  std::string range;
  std::optional<int> steps;
  std::string format = "csv";
  sweep->add_option("--lambda-range", range, "lo:hi")
      ->check(CLI::Validator(
          [](std::string& text) -> std::string {
            const auto r = parse_range(text);
            if (!r) return "expected lo:hi";
            if (!(r->first >= 0.0 && r->first < r->second)) {
              return "range needs 0 <= lo < hi";
            }
            return {};
          },
          "lo:hi"));
  sweep->add_option("--steps", steps, "Number of grid points")
      ->check(CLI::Range(2, 10'000'000));
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* pattern = app.add_subcommand("pattern", "Write the screen intensity as CSV");
  std::string profile_text = "C,C";
  std::string open_spec;
  pattern->add_option("--profile", profile_text, "Moves as alice,bob");
  pattern->add_option("--open", open_spec,
                      "Override open slits: a_c,a_d,b_c,b_d list, all or none");

  auto* geometry = app.add_subcommand("geometry", "Solve for a fixed four-slit window");
  auto* thresholds = app.add_subcommand(
      "thresholds", "Equilibrium thresholds, regime and velocity bound");
  bool mixed = false;
  thresholds->add_flag("--mixed", mixed,
                       "Include the symmetric mixed equilibrium (extension)");

  auto* serve = app.add_subcommand("serve", "Run the JSON service");
  std::optional<int> port;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig cfg = resolve_config(o, err);
    const ApparatusConfig& apparatus = cfg.apparatus;
    const GameParameters& params = apparatus.params;

    if (*round) {
      const StrategyProfile profile{parse_strategy(alice), parse_strategy(bob)};
      emit(render(to_json(play_round(profile, apparatus))), cfg, out);
    } else if (*sweep) {
      double lo = cfg.sweep_lo;
      double hi = cfg.sweep_hi;
      if (!range.empty()) std::tie(lo, hi) = *parse_range(range);
      const SweepResult result = sweep_lambda(
          lo, hi, steps.value_or(cfg.sweep_steps), params.coeffs(), params.k());
      emit(format == "json"
               ? render(sweep_json(result, params.coeffs(), params.k()))
               : sweep_csv(result, params.coeffs(), params.k()),
           cfg, out);
    } else if (*pattern) {
      const StrategyProfile profile = parse_profile(profile_text);
      auto [window, state] = aperture_for_profile(profile, apparatus);
      if (!open_spec.empty()) state = parse_open_override(window, open_spec);
      const RoundObservation obs = observe_aperture(window, state, apparatus);
      if (obs.pattern.all_closed) {
        err << "warning: every slit is closed; the screen stays dark\n";
      }
      emit(pattern_csv(obs.pattern), cfg, out);
    } else if (*geometry) {
      emit(render(to_json(solve_layout(params.coeffs()))), cfg, out);
    } else if (*thresholds) {
      const PayoffCoefficients& c = params.coeffs();
      Json doc = {
          {"lambda", canonical(params.lambda())},
          {"k", canonical(params.k())},
          {"lambda_low", canonical(defection_threshold(c, params.k()))},
          {"lambda_high", canonical(cooperation_threshold(c, params.k()))},
          {"classification", std::string(to_string(classify_regime(params)))},
          {"mass", canonical(cfg.mass)},
          {"sigma", canonical(cfg.sigma)},
          {"velocity_bound",
           canonical(velocity_bound_for_cooperation(c, params.k(),
                                                    UnitScale(cfg.sigma), cfg.mass))},
      };
      if (o.velocity) doc["velocity"] = canonical(*o.velocity);
      if (mixed) doc["mixed_extension"] = to_json(symmetric_mixed_ne(params));
      emit(render(doc), cfg, out);
    } else if (*serve) {
      const FringeService service(cfg);
      const int p = port.value_or(cfg.port);
      err << "serving on " << host << ":" << p << "\n";
      return serve_forever(service, host, p) == 0 ? kExitOk : kExitValidation;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace fringe
