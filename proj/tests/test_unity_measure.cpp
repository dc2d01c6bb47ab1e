#include <gtest/gtest.h>

#include <thread>

#include "ghcs/presets.hpp"
#include "ghcs/unity.hpp"

using namespace ghcs;

namespace {

QuadratureSpec laguerre(int n) { return {n, QuadratureScheme::SemiInfinite, 0.0}; }
QuadratureSpec legendre(int n) { return {n, QuadratureScheme::FiniteInterval, 0.0}; }

}  // namespace

TEST(WeightDensity, SpecExamples) {
  EXPECT_EQ(weight_density(WeightPreset::ho(), 0.0), 1.0);
  for (double t : {0.0, 0.3, 0.99}) EXPECT_NEAR(weight_density(WeightPreset::kp_pho(1.0), t), 1.0, 1e-15);
  EXPECT_NEAR(weight_density(WeightPreset::bg_pho(1.0), 1.0), std::exp(-1.0), 1e-16);
}

TEST(WeightDensity, SupportAndValidation) {
  EXPECT_THROW(weight_density(WeightPreset::kp_pho(1.0), 1.0), OutOfSupport);
  EXPECT_THROW(weight_density(WeightPreset::ho(), -0.1), OutOfSupport);
  EXPECT_THROW(WeightPreset::kp_pho(0.5), std::invalid_argument);
  EXPECT_THROW(WeightPreset::kp_pho(0.3), std::invalid_argument);
  EXPECT_EQ(WeightPreset::kp_pho(1.0).support_limit(), 1.0);
  EXPECT_EQ(WeightPreset::ho().support_limit(), kInfinity);
}

TEST(WeightDensity, NonNegativeOnSupport) {
  for (const auto& w : {WeightPreset::ho(), WeightPreset::bg_pho(0.5), WeightPreset::bg_pho(2.0),
                        WeightPreset::kp_pho(0.75), WeightPreset::kp_pho(3.0)}) {
    const double top = std::min(w.support_limit(), 50.0);
    for (int i = 0; i < 100; ++i) EXPECT_GE(weight_density(w, top * i / 100.0), 0.0) << w.name();
  }
}

TEST(Quadrature, NodesInsideSupportAndWeightsPositive) {
  for (const auto& spec : {laguerre(2), laguerre(200), legendre(2), legendre(200),
                           QuadratureSpec{64, QuadratureScheme::SemiInfinite, 1.5},
                           QuadratureSpec{64, QuadratureScheme::FiniteInterval, -0.5}}) {
    const auto rule = quadrature_rule(spec);
    ASSERT_EQ(rule->nodes.size(), spec.node_count);
    EXPECT_GT(rule->nodes.minCoeff(), 0.0);
    if (spec.scheme == QuadratureScheme::FiniteInterval) EXPECT_LT(rule->nodes.maxCoeff(), 1.0);
    EXPECT_GE(rule->weights.minCoeff(), 0.0);
  }
  EXPECT_THROW(quadrature_rule(laguerre(1)), std::invalid_argument);
}

TEST(Quadrature, ExactForLowDegreePolynomials) {
  const auto lag = quadrature_rule(laguerre(5));
  const auto leg = quadrature_rule(legendre(5));
  for (int n = 0; n <= 9; ++n) {
    EXPECT_NEAR((lag->weights.array() * lag->nodes.array().pow(n)).sum() / std::tgamma(n + 1.0), 1.0, 1e-13);
    EXPECT_NEAR((leg->weights.array() * leg->nodes.array().pow(n)).sum() * (n + 1.0), 1.0, 1e-14);
  }
}

TEST(Quadrature, DeterministicAndSharedAcrossThreads) {
  const auto first = quadrature_rule(laguerre(150));
  std::vector<std::shared_ptr<const QuadratureRule>> seen(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&seen, i] { seen[i] = quadrature_rule(laguerre(150)); });
  }
  for (auto& t : threads) t.join();
  for (const auto& s : seen) {
    EXPECT_EQ(s.get(), first.get());
    EXPECT_EQ(s->nodes, first->nodes);
  }
}

TEST(MomentCheck, SpecExamples) {
  const auto ho = moment_check(WeightPreset::ho(), 3, laguerre(200));
  EXPECT_NEAR(ho.entries[3].value, 6.0, 6e-8);
  EXPECT_LE(ho.entries[3].error, 1e-8);
  const auto kp = moment_check(WeightPreset::kp_pho(1.0), 3, legendre(200));
  EXPECT_NEAR(kp.entries[3].expected, 0.25, 1e-16);
  EXPECT_LE(kp.entries[3].error, 1e-10);
  for (const auto& w : {WeightPreset::ho(), WeightPreset::bg_pho(1.0), WeightPreset::kp_pho(1.0)}) {
    EXPECT_LE(moment_check(w, 0, w.matched_quadrature(200)).entries[0].error, 1e-10) << w.name();
  }
}

TEST(MomentCheck, AcceptancePresetsAtTwoHundredNodes) {
  EXPECT_TRUE(moment_check(WeightPreset::ho(), 10, laguerre(200)).passed());
  EXPECT_TRUE(moment_check(WeightPreset::bg_pho(1.0), 10, laguerre(200)).passed());
  EXPECT_TRUE(moment_check(WeightPreset::kp_pho(1.0), 10, legendre(200)).passed());
}

TEST(MomentCheck, BetaIntegralValidatesHausdorffDensity) {
  // int_0^1 t^n (1-t)^(2k-2) dt = Gamma(n+1) Gamma(2k-1) / Gamma(n+2k)
  for (double k : {0.75, 1.0, 1.6, 3.0}) {
    const auto w = WeightPreset::kp_pho(k);
    for (int n = 0; n <= 10; ++n) {
      const double beta = std::exp(std::lgamma(n + 1.0) + std::lgamma(2 * k - 1) - std::lgamma(n + 2 * k));
      EXPECT_NEAR((2 * k - 1) * beta / w.target_moment(n), 1.0, 1e-13);
    }
    EXPECT_TRUE(moment_check(w, 10, w.matched_quadrature(200)).passed()) << k;
  }
}

TEST(MomentCheck, MismatchedSchemeRejected) {
  EXPECT_THROW(moment_check(WeightPreset::ho(), 3, legendre(20)), std::invalid_argument);
}

TEST(MomentCheck, UnderResolvedWhenDoublingDoesNotHelp) {
  // (1-t)^(-0.5) sampled by plain Legendre: error falls only like 1/sqrt(N).
  EXPECT_NO_THROW(moment_check(WeightPreset::kp_pho(0.75), 10, legendre(64), 1e-8));
  // A zero tolerance cannot be met once the rule is exact, and doubling no longer helps.
  EXPECT_THROW(moment_check(WeightPreset::ho(), 4, laguerre(64), 0.0), QuadratureUnderResolved);
}

TEST(MomentConvergence, DoublingLadder) {
  for (const auto& w : {WeightPreset::ho(), WeightPreset::bg_pho(1.0), WeightPreset::kp_pho(1.0),
                        WeightPreset::bg_pho(0.5), WeightPreset::kp_pho(2.5)}) {
    const auto c = moment_convergence(w, 10, w.matched_quadrature(200));
    EXPECT_TRUE(c.monotone) << w.name();
    ASSERT_EQ(c.steps.size(), 7u);
    EXPECT_EQ(c.steps.front().node_count, 3);
    EXPECT_EQ(c.steps.back().node_count, 200);
    EXPECT_GT(c.steps.front().worst_error, 1e-3);
    EXPECT_LE(c.steps.back().worst_error, 1e-12);
  }
}

TEST(MomentConvergence, AlgebraicDecayStillHalvesPerDoubling) {
  const auto c = moment_convergence(WeightPreset::bg_pho(0.5), 10, laguerre(200));
  EXPECT_GT(c.steps.back().worst_error, 1e-8);
  for (std::size_t i = 2; i < c.steps.size(); ++i) {
    EXPECT_LT(c.steps[i].worst_error, c.steps[i - 1].worst_error);
  }
}

TEST(UnityReconstruction, SpecExamples) {
  const auto presets = builtin_presets();
  const auto ho = unity_reconstruction_check(presets.at("ho").family(), WeightPreset::ho(), 10, laguerre(200));
  EXPECT_TRUE(ho.passed());
  EXPECT_LE(ho.entries[0].error, 1e-10);
  const auto bg = unity_reconstruction_check(presets.at("pho-bg").family(), WeightPreset::bg_pho(1.0), 10,
                                             laguerre(200));
  EXPECT_TRUE(bg.passed());
  EXPECT_EQ(bg.entries.size(), 11u);
  const auto kp = unity_reconstruction_check(presets.at("pho-kp").family(), WeightPreset::kp_pho(1.0), 10,
                                             legendre(200));
  EXPECT_TRUE(kp.passed());
}

TEST(UnityReconstruction, RejectsMismatchedWeight) {
  const auto presets = builtin_presets();
  EXPECT_THROW(unity_reconstruction_check(presets.at("ho").family(), WeightPreset::bg_pho(1.0), 5, laguerre(50)),
               std::invalid_argument);
}

TEST(WeightFor, RegisteredPresets) {
  const auto presets = builtin_presets();
  EXPECT_EQ(weight_for(presets.at("ho"))->type(), WeightPreset::Type::HO);
  EXPECT_EQ(weight_for(presets.at("pho-bg"))->k(), 1.0);
  EXPECT_EQ(weight_for(presets.at("ho-e0"))->k(), 0.5);
  EXPECT_EQ(weight_for(presets.at("pho-kp"))->type(), WeightPreset::Type::KPPHO);
  EXPECT_FALSE(weight_for(presets.at("pho-gk")).has_value());
  EXPECT_FALSE(weight_for(presets.at("quadratic")).has_value());
}
