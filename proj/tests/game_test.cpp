#include "fringe/game.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace fringe {
namespace {

using enum Strategy;
using testing::random_coeffs;
using testing::grid_indifference;
using testing::table_payoff;

const PayoffCoefficients kDemo{5, 3, 2, 1};

TEST(PayoffCoefficients, RejectsBrokenOrdering) {
  EXPECT_THROW(PayoffCoefficients(3, 5, 2, 1), ValidationError);
  EXPECT_THROW(PayoffCoefficients(5, 3, 3, 1), ValidationError);
  EXPECT_THROW(PayoffCoefficients(5, 3, 2, 0), ValidationError);
  EXPECT_THROW(PayoffCoefficients(5, 3, 2, -1), ValidationError);
  EXPECT_THROW(PayoffCoefficients(NAN, 3, 2, 1), ValidationError);
  EXPECT_NO_THROW(PayoffCoefficients(5, 3, 2, 1));
}

TEST(GameParameters, RejectsNegativeWavelengthAndScale) {
  EXPECT_THROW(GameParameters(kDemo, -0.1, 100), ValidationError);
  EXPECT_THROW(GameParameters(kDemo, 0.1, 0), ValidationError);
  EXPECT_THROW(GameParameters(kDemo, 0.1, -2), ValidationError);
  EXPECT_NO_THROW(GameParameters(kDemo, 0.0, 1));
}

TEST(Strategy, ParsesLabels) {
  EXPECT_EQ(parse_strategy("C"), Cooperate);
  EXPECT_EQ(parse_strategy("d"), Defect);
  EXPECT_EQ(parse_strategy("Defect"), Defect);
  EXPECT_THROW(parse_strategy("X"), ValidationError);
  EXPECT_EQ(parse_profile("D,C"), (StrategyProfile{Defect, Cooperate}));
  EXPECT_THROW(parse_profile("DC"), ValidationError);
}

TEST(Separation, FollowsFocalOrdering) {
  EXPECT_EQ(separation_for_profile({Cooperate, Cooperate}, kDemo), 3);
  EXPECT_EQ(separation_for_profile({Defect, Defect}, kDemo), 2);
  EXPECT_EQ(separation_for_profile({Defect, Cooperate}, kDemo), 5);
  EXPECT_EQ(separation_for_profile({Cooperate, Defect}, kDemo), 1);
}

TEST(QuantumPayoff, HandEvaluatedExamples) {
  const PayoffPair classical = quantum_payoff({Cooperate, Cooperate}, {kDemo, 0.0, 100});
  EXPECT_EQ(classical.alice, 3);
  EXPECT_EQ(classical.bob, 3);

  const GameParameters params(kDemo, 0.3, 100);
  const PayoffPair cc = quantum_payoff({Cooperate, Cooperate}, params);
  EXPECT_DOUBLE_EQ(cc.alice, 13);
  EXPECT_DOUBLE_EQ(cc.bob, 13);
  const PayoffPair cd = quantum_payoff({Cooperate, Defect}, params);
  EXPECT_DOUBLE_EQ(cd.alice, 31);
  EXPECT_DOUBLE_EQ(cd.bob, 11);
}

TEST(QuantumPayoff, ClassicalEmbeddingIsBitExact) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_coeffs(rng);
    const GameParameters params(c, 0.0, 1.0 + i);
    EXPECT_EQ(quantum_payoff({Cooperate, Cooperate}, params), (PayoffPair{c.r(), c.r()}));
    EXPECT_EQ(quantum_payoff({Cooperate, Defect}, params), (PayoffPair{c.s(), c.t()}));
    EXPECT_EQ(quantum_payoff({Defect, Cooperate}, params), (PayoffPair{c.t(), c.s()}));
    EXPECT_EQ(quantum_payoff({Defect, Defect}, params), (PayoffPair{c.p(), c.p()}));
  }
}

TEST(QuantumPayoff, SwappingPlayersSwapsPayoffs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lam(0.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const GameParameters params(random_coeffs(rng), lam(rng), 50.0);
    for (const auto& profile : kAllProfiles) {
      EXPECT_EQ(quantum_payoff(profile, params).alice,
                quantum_payoff(profile.swapped(), params).bob);
    }
  }
}

TEST(SymmetricNE, DefectionIsClassicalEquilibrium) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const GameParameters params(random_coeffs(rng), 0.0, 1.0 + i);
    EXPECT_TRUE(is_symmetric_ne(Defect, params));
    EXPECT_FALSE(is_symmetric_ne(Cooperate, params));
  }
}

TEST(SymmetricNE, BoundaryCountsAsEquilibrium) {
  // rt/k = 0.15 exactly on the boundary.
  EXPECT_TRUE(is_symmetric_ne(Cooperate, {kDemo, 0.15, 100}));
  // sp/k = 0.02 < 0.05.
  EXPECT_FALSE(is_symmetric_ne(Defect, {kDemo, 0.05, 100}));
  EXPECT_TRUE(is_symmetric_ne(Defect, {kDemo, 0.02, 100}));
}

TEST(SymmetricNE, MatchesThresholdsOffBoundary) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> kdist(0.5, 200.0);
  for (int draw = 0; draw < 1000; ++draw) {
    const auto c = random_coeffs(rng);
    const double k = kdist(rng);
    const double low = c.s() * c.p() / k;
    const double high = c.r() * c.t() / k;
    for (int i = 0; i <= 40; ++i) {
      const double lambda = 1.5 * high * i / 40.0;
      const GameParameters params(c, lambda, k);
      if (std::abs(lambda - low) > 1e-9 * high) {
        EXPECT_EQ(is_symmetric_ne(Defect, params), lambda <= low);
      }
      if (std::abs(lambda - high) > 1e-9 * high) {
        EXPECT_EQ(is_symmetric_ne(Cooperate, params), lambda >= high);
      }
    }
  }
}

TEST(PureNE, Examples) {
  EXPECT_EQ(pure_ne_profiles({kDemo, 0.0, 100}),
            (std::vector<StrategyProfile>{{Defect, Defect}}));
  EXPECT_EQ(pure_ne_profiles({kDemo, 0.2, 100}),
            (std::vector<StrategyProfile>{{Cooperate, Cooperate}}));
  const auto band = pure_ne_profiles({kDemo, 0.05, 100});
  for (const auto& p : band) {
    EXPECT_NE(p, (StrategyProfile{Cooperate, Cooperate}));
    EXPECT_NE(p, (StrategyProfile{Defect, Defect}));
  }
}

TEST(PureNE, AgreesWithDirectInequalities) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> kdist(0.5, 200.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int draw = 0; draw < 1000; ++draw) {
    const auto c = random_coeffs(rng);
    const double k = kdist(rng);
    const double lambda = unit(rng) * 2.0 * c.r() * c.t() / k;
    auto P = [&](bool focal_c, bool other_c) {
      return table_payoff(focal_c, other_c, c.t(), c.r(), c.p(), c.s(), lambda, k);
    };
    std::vector<StrategyProfile> expected;
    for (bool a : {true, false}) {
      for (bool b : {true, false}) {
        const bool alice_ok = P(a, b) >= P(!a, b);
        const bool bob_ok = P(b, a) >= P(!b, a);
        if (alice_ok && bob_ok) {
          expected.push_back({a ? Cooperate : Defect, b ? Cooperate : Defect});
        }
      }
    }
    EXPECT_EQ(pure_ne_profiles({c, lambda, k}), expected);
  }
}

TEST(PureNE, CooperationPaysRPlusKLambdaOverR) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto c = random_coeffs(rng);
    const double k = 10.0 + i;
    const double lambda = 1.2 * c.r() * c.t() / k;
    const GameParameters params(c, lambda, k);
    ASSERT_TRUE(is_symmetric_ne(Cooperate, params));
    EXPECT_EQ(quantum_payoff({Cooperate, Cooperate}, params).alice,
              c.r() + k * lambda / c.r());
  }
}

TEST(MixedNE, AbsentWhenAPureStrategyIsAnEquilibrium) {
  EXPECT_FALSE(symmetric_mixed_ne({kDemo, 0.0, 100}).cooperate_probability);
  EXPECT_FALSE(symmetric_mixed_ne({kDemo, 0.2, 100}).cooperate_probability);
}

TEST(MixedNE, MatchesGridSearchInsideTheBand) {
  const GameParameters params(kDemo, 0.05, 100);
  const auto mixed = symmetric_mixed_ne(params);
  ASSERT_TRUE(mixed.cooperate_probability);
  EXPECT_GT(*mixed.cooperate_probability, 0.0);
  EXPECT_LT(*mixed.cooperate_probability, 1.0);
  EXPECT_NEAR(*mixed.cooperate_probability, grid_indifference(params), 1e-3);
  // 1.5 / (1.5 + 4/3)
  EXPECT_NEAR(*mixed.cooperate_probability, 1.5 / (1.5 + 4.0 / 3.0), 1e-12);
}

TEST(Thresholds, DemoValues) {
  EXPECT_DOUBLE_EQ(defection_threshold(kDemo, 100), 0.02);
  EXPECT_DOUBLE_EQ(cooperation_threshold(kDemo, 100), 0.15);
}

}  // namespace
}  // namespace fringe
