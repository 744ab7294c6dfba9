#include "fringe/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace fringe {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::string_view key) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError(std::string(key) + ": expected a number, got '" +
                          std::string(text) + "'");
  }
  return value;
}

long parse_int(std::string_view text, std::string_view key) {
  text = trim(text);
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError(std::string(key) + ": expected an integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

PayoffCoefficients parse_coefficients(std::string_view text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    v.push_back(parse_double(text.substr(start, comma - start), "coeffs"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) {
    throw ValidationError("coeffs: expected four values t,r,p,s");
  }
  return {v[0], v[1], v[2], v[3]};
}

RunConfig parse_run_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) +
                            ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!entries.emplace(key, value).second) {
      throw ValidationError("config line " + std::to_string(line_no) +
                            ": duplicate key '" + key + "'");
    }
  }

  static const std::vector<std::string_view> known{
      "coeffs",        "k",
      "lambda",        "layout_mode",
      "payoff_mode",   "slit_width",
      "grid_u_min",    "grid_u_max",
      "grid_samples",  "detector_bin_width",
      "detector_peak_threshold", "detector_min_bins",
      "sigma",         "mass",
      "sweep_lo",      "sweep_hi",
      "sweep_steps",   "output",
      "port"};
  for (const auto& [key, value] : entries) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ValidationError("unknown config key '" + key + "'");
    }
  }

  auto get = [&](std::string_view key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  RunConfig cfg;
  ApparatusConfig& app = cfg.apparatus;
  PayoffCoefficients coeffs = app.params.coeffs();
  double lambda = app.params.lambda();
  double k = app.params.k();
  if (auto v = get("coeffs")) coeffs = parse_coefficients(*v);
  if (auto v = get("k")) k = parse_double(*v, "k");
  if (auto v = get("lambda")) lambda = parse_double(*v, "lambda");
  app.params = GameParameters(coeffs, lambda, k);

  if (auto v = get("layout_mode")) app.layout_mode = parse_layout_mode(*v);
  if (auto v = get("payoff_mode")) app.payoff_mode = parse_payoff_mode(*v);
  if (auto v = get("slit_width")) app.slit_width = parse_double(*v, "slit_width");

  const auto* gmin = get("grid_u_min");
  const auto* gmax = get("grid_u_max");
  const auto* gn = get("grid_samples");
  if (gmin || gmax || gn) {
    if (!(gmin && gmax && gn)) {
      throw ValidationError(
          "grid_u_min, grid_u_max and grid_samples must be given together");
    }
    const long n = parse_int(*gn, "grid_samples");
    if (n < 0) throw ValidationError("grid_samples must be positive");
    app.grid = ScreenGrid(parse_double(*gmin, "grid_u_min"),
                          parse_double(*gmax, "grid_u_max"),
                          static_cast<std::size_t>(n));
  }

  if (auto v = get("detector_bin_width")) {
    app.detector.bin_width = parse_double(*v, "detector_bin_width");
  }
  if (auto v = get("detector_peak_threshold")) {
    app.detector.peak_threshold = parse_double(*v, "detector_peak_threshold");
  }
  if (auto v = get("detector_min_bins")) {
    app.detector.min_resolvable_spacing_bins =
        static_cast<int>(parse_int(*v, "detector_min_bins"));
  }
  app.validate();

  if (auto v = get("sigma")) cfg.sigma = UnitScale(parse_double(*v, "sigma")).sigma();
  if (auto v = get("mass")) {
    cfg.mass = parse_double(*v, "mass");
    if (!(cfg.mass > 0.0)) throw ValidationError("mass must be positive");
  }
  if (auto v = get("sweep_lo")) cfg.sweep_lo = parse_double(*v, "sweep_lo");
  if (auto v = get("sweep_hi")) cfg.sweep_hi = parse_double(*v, "sweep_hi");
  if (auto v = get("sweep_steps")) {
    cfg.sweep_steps = static_cast<int>(parse_int(*v, "sweep_steps"));
  }
  if (!(cfg.sweep_lo >= 0.0 && cfg.sweep_lo < cfg.sweep_hi) ||
      cfg.sweep_steps < 2) {
    throw ValidationError("sweep defaults need 0 <= sweep_lo < sweep_hi and "
                          "sweep_steps >= 2");
  }
  if (auto v = get("output")) cfg.output = *v;
  if (auto v = get("port")) {
    const long port = parse_int(*v, "port");
    if (port < 0 || port > 65535) throw ValidationError("port out of range");
    cfg.port = static_cast<int>(port);
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot read config file '" + path.string() + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::optional<std::filesystem::path> config_path_from_env() {
  const char* value = std::getenv(kConfigEnvVar);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

Json to_json(const RunConfig& cfg) {
  const ApparatusConfig& app = cfg.apparatus;
  const PayoffCoefficients& c = app.params.coeffs();
  Json grid = nullptr;
  if (app.grid) {
    grid = {{"u_min", canonical(app.grid->u_min())},
            {"u_max", canonical(app.grid->u_max())},
            {"sample_count", app.grid->sample_count()}};
  }
  return {
      {"coeffs",
       {{"t", canonical(c.t())},
        {"r", canonical(c.r())},
        {"p", canonical(c.p())},
        {"s", canonical(c.s())}}},
      {"k", canonical(app.params.k())},
      {"lambda", canonical(app.params.lambda())},
      {"layout_mode", std::string(to_string(app.layout_mode))},
      {"payoff_mode", std::string(to_string(app.payoff_mode))},
      {"slit_width", app.slit_width ? Json(canonical(*app.slit_width))
                                    : Json(nullptr)},
      {"grid", grid},
      {"detector",
       {{"bin_width", canonical(app.detector.bin_width)},
        {"peak_threshold", canonical(app.detector.peak_threshold)},
        {"min_resolvable_spacing_bins",
         app.detector.min_resolvable_spacing_bins}}},
      {"sigma", canonical(cfg.sigma)},
      {"mass", canonical(cfg.mass)},
      {"sweep",
       {{"lo", canonical(cfg.sweep_lo)},
        {"hi", canonical(cfg.sweep_hi)},
        {"steps", cfg.sweep_steps}}},
      {"thresholds",
       {{"lambda_low", canonical(defection_threshold(c, app.params.k()))},
        {"lambda_high", canonical(cooperation_threshold(c, app.params.k()))}}},
  };
}

}  // namespace fringe
