#include "fringe/config.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fringe {
namespace {

TEST(RunConfig, DefaultsAreTheDemoTable) {
  const RunConfig cfg = parse_run_config("");
  const auto& params = cfg.apparatus.params;
  EXPECT_EQ(params.coeffs(), PayoffCoefficients(5, 3, 2, 1));
  EXPECT_EQ(params.k(), 100.0);
  EXPECT_EQ(cfg.apparatus.layout_mode, LayoutMode::Abstract);
  EXPECT_EQ(cfg.apparatus.payoff_mode, PayoffMode::Direct);
  EXPECT_FALSE(cfg.apparatus.grid);
  EXPECT_EQ(cfg.port, 8080);
}

TEST(RunConfig, ParsesEveryKey) {
  const RunConfig cfg = parse_run_config(R"(
# comment line
coeffs = 4, 3, 2, 1
k = 10          # trailing comment
lambda = 0.05
layout_mode = fixed_window
payoff_mode = measured
slit_width = 0.02
grid_u_min = -0.5
grid_u_max = 0.5
grid_samples = 2048
detector_bin_width = 1e-5
detector_peak_threshold = 0.1
detector_min_bins = 3
sigma = 1e-9
mass = 1e-30
sweep_lo = 0.01
sweep_hi = 0.5
sweep_steps = 10
output = out.json
port = 9000
)");
  const auto& app = cfg.apparatus;
  EXPECT_EQ(app.params.coeffs(), PayoffCoefficients(4, 3, 2, 1));
  EXPECT_EQ(app.params.k(), 10.0);
  EXPECT_EQ(app.params.lambda(), 0.05);
  EXPECT_EQ(app.layout_mode, LayoutMode::FixedWindow);
  EXPECT_EQ(app.payoff_mode, PayoffMode::Measured);
  EXPECT_EQ(app.slit_width, 0.02);
  ASSERT_TRUE(app.grid);
  EXPECT_EQ(app.grid->sample_count(), 2048u);
  EXPECT_EQ(app.detector.bin_width, 1e-5);
  EXPECT_EQ(app.detector.min_resolvable_spacing_bins, 3);
  EXPECT_EQ(cfg.sigma, 1e-9);
  EXPECT_EQ(cfg.mass, 1e-30);
  EXPECT_EQ(cfg.sweep_steps, 10);
  EXPECT_EQ(cfg.output, "out.json");
  EXPECT_EQ(cfg.port, 9000);
}

TEST(RunConfig, RejectsUnknownKeys) {
  try {
    parse_run_config("coefs = 5,3,2,1\n");
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown config key 'coefs'"), std::string::npos);
  }
}

TEST(RunConfig, RejectsMalformedInput) {
  EXPECT_THROW(parse_run_config("k 100\n"), ValidationError);
  EXPECT_THROW(parse_run_config("k = abc\n"), ValidationError);
  EXPECT_THROW(parse_run_config("k = 1\nk = 2\n"), ValidationError);
  EXPECT_THROW(parse_run_config("coeffs = 3,5,2,1\n"), ValidationError);
  EXPECT_THROW(parse_run_config("coeffs = 5,3,2\n"), ValidationError);
  EXPECT_THROW(parse_run_config("grid_u_min = -0.5\n"), ValidationError);
  EXPECT_THROW(parse_run_config("detector_peak_threshold = 1.5\n"), ValidationError);
  EXPECT_THROW(parse_run_config("sweep_lo = 1\nsweep_hi = 0.5\n"), ValidationError);
}

TEST(RunConfig, LoadsFromFileAndEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "fringe_config_test.cfg";
  {
    std::ofstream f(path);
    f << "k = 42\n";
  }
  EXPECT_EQ(load_run_config(path).apparatus.params.k(), 42.0);
  ::setenv(kConfigEnvVar, path.c_str(), 1);
  EXPECT_EQ(config_path_from_env(), path);
  ::unsetenv(kConfigEnvVar);
  EXPECT_FALSE(config_path_from_env());
  std::filesystem::remove(path);
  EXPECT_THROW(load_run_config(path), ValidationError);
}

}  // namespace
}  // namespace fringe
