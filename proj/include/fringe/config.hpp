#pragma once

// Run configuration, stored as a plain `key = value` file:
//
//   # demo table
//   coeffs      = 5,3,2,1
//   k           = 100
//   lambda      = 0.2
//   payoff_mode = measured
//
// Blank lines and `#` comments are ignored; unknown keys are an error.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fringe/arbiter.hpp"
#include "fringe/matter_waves.hpp"
#include "fringe/report.hpp"

namespace fringe {

inline constexpr const char* kConfigEnvVar = "FRINGE_ARENA_CONFIG";

struct RunConfig {
  ApparatusConfig apparatus;
  double sigma = 1.0;
  double mass = kConstants.m_e;
  double sweep_lo = 0.0;
  double sweep_hi = 0.3;
  int sweep_steps = 64;
  std::optional<std::string> output;
  int port = 8080;
};

RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Path from the environment variable, if set and non-empty.
std::optional<std::filesystem::path> config_path_from_env();

/// "t,r,p,s"
PayoffCoefficients parse_coefficients(std::string_view text);

Json to_json(const RunConfig& config);

}  // namespace fringe
