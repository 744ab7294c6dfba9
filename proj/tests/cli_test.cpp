#include "fringe/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "fringe/config.hpp"

namespace fringe {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fringe_arena");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliRound, ClassicalLimit) {
  const auto r = cli({"round", "--alice", "C", "--bob", "C", "--lambda", "0", "--k", "100",
                      "--coeffs", "5,3,2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["payoffs"], Json::array({3.0, 3.0}));
  EXPECT_EQ(j["regime"], "classical_unresolved");
}

TEST(CliRound, DirectQuantumPayoff) {
  const auto r = cli({"round", "--alice", "D", "--bob", "C", "--lambda", "0.2", "--k", "100",
                      "--coeffs", "5,3,2,1", "--mode", "direct"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["payoffs"][0], 9.0);
}

TEST(CliRound, MatchesLibraryExactly) {
  const auto r = cli({"round", "--alice", "C", "--bob", "D", "--lambda", "0.1", "--mode",
                      "measured"});
  ASSERT_EQ(r.code, 0) << r.err;
  ApparatusConfig cfg;
  cfg.params = GameParameters({5, 3, 2, 1}, 0.1, 100);
  cfg.payoff_mode = PayoffMode::Measured;
  const auto outcome = play_round({Strategy::Cooperate, Strategy::Defect}, cfg);
  EXPECT_EQ(r.out, render(to_json(outcome)));
}

TEST(CliRound, ErrorsAndExitCodes) {
  const auto bad_order = cli({"round", "--alice", "C", "--bob", "C", "--coeffs", "3,5,2,1"});
  EXPECT_EQ(bad_order.code, kExitValidation);
  EXPECT_NE(bad_order.err.find("t > r > p > s"), std::string::npos);

  EXPECT_EQ(cli({"round", "--alice", "X", "--bob", "C"}).code, kExitUsage);
  EXPECT_EQ(cli({"round", "--alice", "C"}).code, kExitUsage);
  EXPECT_EQ(cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"round", "--alice", "C", "--bob", "C", "--lambda", "-1"}).code,
            kExitValidation);
  EXPECT_EQ(cli({"round", "--alice", "C", "--bob", "C", "--mode", "psychic"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(CliRound, VelocitySetsWavelength) {
  // sigma = 1e-9 m per unit, electron at 7.274e5 m/s: lambda ~ 1 unit.
  const auto r = cli({"thresholds", "--velocity", "7.274e5", "--sigma", "1e-9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["lambda"].get<double>(), 1.0, 1e-3);
  const auto fast = cli({"thresholds", "--velocity", "1e8"});
  EXPECT_NE(fast.err.find("warning"), std::string::npos);
  EXPECT_EQ(cli({"thresholds", "--velocity", "1", "--lambda", "0.1"}).code, kExitUsage);
}

TEST(CliSweep, CsvRowsAndJsonThresholds) {
  const auto csv = cli({"sweep", "--lambda-range", "0:0.3", "--steps", "40"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 41);

  const auto json = cli({"sweep", "--format", "json"});
  ASSERT_EQ(json.code, 0) << json.err;
  const Json j = Json::parse(json.out);
  EXPECT_EQ(j["thresholds"]["analytic"]["lambda_low"], 0.02);
  EXPECT_EQ(j["thresholds"]["analytic"]["lambda_high"], 0.15);
  EXPECT_NEAR(j["thresholds"]["detected"]["lambda_low"].get<double>(), 0.02, 1e-6);
  EXPECT_NEAR(j["thresholds"]["detected"]["lambda_high"].get<double>(), 0.15, 1e-6);

  EXPECT_EQ(cli({"sweep", "--lambda-range", "0:0"}).code, kExitUsage);
  EXPECT_EQ(cli({"sweep", "--lambda-range", "abc"}).code, kExitUsage);
  EXPECT_EQ(cli({"sweep", "--steps", "1"}).code, kExitUsage);
}

TEST(CliPattern, NormalizedCsv) {
  const auto r = cli({"pattern", "--profile", "C,C", "--lambda", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4097);
  EXPECT_NE(r.out.find(",1\n"), std::string::npos);
}

TEST(CliPattern, OverridesAndClosedWindow) {
  const auto single = cli({"pattern", "--profile", "C,C", "--lambda", "0.3", "--open", "a_c"});
  ASSERT_EQ(single.code, 0) << single.err;

  const auto closed = cli({"pattern", "--profile", "C,C", "--lambda", "0.3", "--open", "none"});
  ASSERT_EQ(closed.code, 0);
  EXPECT_NE(closed.err.find("warning"), std::string::npos);
  std::istringstream in(closed.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ASSERT_EQ(line.substr(line.find(',')), ",0");
  }
  EXPECT_EQ(cli({"pattern", "--lambda", "0.3", "--open", "a_d"}).code, kExitValidation);
  EXPECT_EQ(cli({"pattern", "--lambda", "0"}).code, kExitValidation);
}

TEST(CliGeometry, LayoutJson) {
  const auto r = cli({"geometry", "--coeffs", "4,3,2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["feasible"], true);
  EXPECT_EQ(Json::parse(cli({"geometry"}).out)["feasible"], false);
}

TEST(CliThresholds, DemoValues) {
  const auto r = cli({"thresholds", "--lambda", "0.05", "--mixed"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["lambda_low"], 0.02);
  EXPECT_EQ(j["lambda_high"], 0.15);
  EXPECT_EQ(j["classification"], "no_pure_symmetric_ne");
  EXPECT_TRUE(j["mixed_extension"]["cooperate_probability"].is_number());
  EXPECT_FALSE(Json::parse(cli({"thresholds"}).out).contains("mixed_extension"));
}

TEST(CliOutput, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "fringe_cli_out.json";
  const auto r = cli({"geometry", "-o", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace fringe
