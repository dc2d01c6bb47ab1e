#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ghcs/pfq.hpp"

using namespace ghcs;

namespace {

// mpmath, 40 digits (tests/oracles/frozen_values.py)
constexpr double kConfluentHalfAtOne = 2.0300784692787049755;
constexpr double kBesselTypeAtOne = 1.5906368546373290634;   // 0F1(;2;1)
constexpr double kConfluentTwoAtHalf = 1.2974425414002562937;  // 1F1(1;2;0.5)
constexpr double kConfluentTwoAtQuarter = 1.1361016667509659363;
constexpr double kConfluentTwoAtFifty = 1.0369411057174144928e20;
constexpr double kConfluentHalfAtThirty = 1729094663446.2934416;

double rel(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace

TEST(Pochhammer, SpecExamples) {
  EXPECT_EQ(pochhammer(7.3, 0), 1.0);
  EXPECT_EQ(pochhammer(1.0, 4), 24.0);
  EXPECT_EQ(pochhammer(3.0, 2), 12.0);
  EXPECT_DOUBLE_EQ(pochhammer(0.5, 3), 1.875);
}

TEST(Pochhammer, ShiftPropertiesOnRandomArguments) {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> xs(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = xs(rng);
    for (int n = 0; n <= 30; ++n) {
      EXPECT_LE(rel(pochhammer(x, n + 1), (x + n) * pochhammer(x, n)), 1e-13);
      EXPECT_LE(rel(pochhammer(x + 1.0, n), pochhammer(x, n + 1) / x), 1e-13);
    }
  }
}

TEST(Pochhammer, LogFormMatchesDirectProduct) {
  for (double x : {0.5, 1.0, 2.5, 7.0}) {
    for (int n : {1, 10, 100, 150, 151, 170}) {
      const auto lp = pochhammer_log(x, n);
      const double direct = pochhammer(x, n);
      if (!std::isfinite(direct)) continue;
      EXPECT_EQ(lp.sign, 1);
      EXPECT_NEAR(lp.log_abs, std::log(direct), 1e-12 * std::max(1.0, std::log(direct)));
    }
  }
}

TEST(Pochhammer, LogFormSignForNegativeArguments) {
  // (-2.5)_3 = (-2.5)(-1.5)(-0.5) < 0
  const auto lp = pochhammer_log(-2.5, 3);
  EXPECT_EQ(lp.sign, -1);
  EXPECT_NEAR(lp.log_abs, std::log(1.875), 1e-14);
  EXPECT_EQ(pochhammer_log(-2.0, 5).sign, 0);
  // Beyond the direct-sum range: four negative factors, the rest positive.
  const auto big = pochhammer_log(-3.5, 200);
  EXPECT_EQ(big.sign, 1);
  EXPECT_NEAR(big.log_abs, std::lgamma(196.5) - std::lgamma(-3.5), 1e-9);
}

TEST(HypergeometricParams, RejectsInvalidParameters) {
  EXPECT_THROW(HypergeometricParams({}, {0.0}), std::invalid_argument);
  EXPECT_THROW(HypergeometricParams({}, {-2.0}), std::invalid_argument);
  EXPECT_THROW(HypergeometricParams({1.0, 1.0, 1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(HypergeometricParams({NAN}, {}), std::invalid_argument);
  EXPECT_THROW(HypergeometricParams::make(2, 0, {1.0}, {}), std::invalid_argument);
  EXPECT_NO_THROW(HypergeometricParams({-3.0}, {0.5}));
}

TEST(HypergeometricParams, SwappedExchangesLists) {
  const HypergeometricParams p({1.0}, {1.5, 2.0});
  EXPECT_EQ(p.swapped().a(), (std::vector<double>{1.5, 2.0}));
  EXPECT_EQ(p.swapped().b(), (std::vector<double>{1.0}));
}

TEST(StructureConstant, SpecExamples) {
  const HypergeometricParams p({1.0}, {1.5});
  EXPECT_DOUBLE_EQ(structure_constant(p, Kind::BG, 2), 3.75);
  EXPECT_NEAR(structure_constant(p, Kind::KP, 2), 16.0 / 15.0, 1e-15);
  EXPECT_EQ(structure_constant(p, Kind::BG, 0), 1.0);
  EXPECT_EQ(structure_constant(p, Kind::KP, 0), 1.0);
}

TEST(StructureConstant, TermRecurrenceConsistency) {
  const std::vector<HypergeometricParams> registered{
      HypergeometricParams({}, {}),     HypergeometricParams({1.0}, {1.5}),
      HypergeometricParams({1.0}, {2.0}), HypergeometricParams({}, {2.0}),
      HypergeometricParams({2.0}, {}),  HypergeometricParams({0.7, 1.3}, {2.2})};
  for (const auto& p : registered) {
    for (int n = 0; n < 50; ++n) {
      const double bg_ratio = (n + 1.0) * p.lower_product(n) / p.upper_product(n);
      EXPECT_LE(rel(structure_constant(p, Kind::BG, n + 1),
                    structure_constant(p, Kind::BG, n) * bg_ratio),
                1e-13);
      const double kp_ratio = (n + 1.0) * p.upper_product(n) / p.lower_product(n);
      EXPECT_LE(rel(structure_constant(p, Kind::KP, n + 1),
                    structure_constant(p, Kind::KP, n) * kp_ratio),
                1e-13);
    }
  }
}

TEST(StructureConstant, OverflowSignalsAndLogFormContinues) {
  const HypergeometricParams p({}, {});
  EXPECT_THROW(structure_constant(p, Kind::BG, 200), std::overflow_error);
  EXPECT_NEAR(structure_constant_log(p, Kind::BG, 200).log_abs, std::lgamma(201.0), 1e-9);
  EXPECT_THROW(structure_constant(p, Kind::GK, 2), std::invalid_argument);
}

TEST(ConvergenceRadius, SpecExamples) {
  EXPECT_EQ(convergence_radius(HypergeometricParams({1.0}, {1.0})), kInfinity);
  EXPECT_EQ(convergence_radius(HypergeometricParams({2.0}, {})), 1.0);
  EXPECT_EQ(convergence_radius(HypergeometricParams({}, {1.0})), kInfinity);
}

TEST(EvalPfq, SpecExamples) {
  EXPECT_NEAR(eval_pfq(HypergeometricParams({}, {}), 1.0).value, std::exp(1.0), 1e-15);
  EXPECT_LE(rel(eval_pfq(HypergeometricParams({1.0}, {1.5}), 1.0).value, kConfluentHalfAtOne),
            1e-14);
  const auto at_zero = eval_pfq(HypergeometricParams({0.3, 2.0}, {1.7}), 0.0);
  EXPECT_EQ(at_zero.value, 1.0);
  EXPECT_TRUE(at_zero.converged);
}

TEST(EvalPfq, FrozenOracleValues) {
  EXPECT_LE(rel(eval_pfq(HypergeometricParams({}, {2.0}), 1.0).value, kBesselTypeAtOne), 1e-14);
  const HypergeometricParams two({1.0}, {2.0});
  EXPECT_LE(rel(eval_pfq(two, 0.5).value, kConfluentTwoAtHalf), 1e-14);
  EXPECT_LE(rel(eval_pfq(two, 0.25).value, kConfluentTwoAtQuarter), 1e-14);
  EXPECT_LE(rel(eval_pfq(two, 50.0).value, kConfluentTwoAtFifty), 1e-13);
  EXPECT_LE(rel(eval_pfq(HypergeometricParams({1.0}, {1.5}), 30.0).value, kConfluentHalfAtThirty),
            1e-13);
}

TEST(EvalPfq, ConvergedResultSatisfiesStoppingRule) {
  const auto r = eval_pfq(HypergeometricParams({1.0}, {1.5}), 4.0);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.last_term_magnitude, 1e-15 * std::abs(r.value));
  EXPECT_EQ(r.radius, kInfinity);
}

TEST(EvalPfq, RadiusMarginEnforced) {
  const HypergeometricParams p({2.0}, {});
  EXPECT_THROW(eval_pfq(p, 1.5), OutOfRadius);
  EXPECT_THROW(eval_pfq(p, 1.0 - 1e-7), OutOfRadius);
  EXPECT_THROW(eval_pfq(p, Complex{0.0, 1.0}), OutOfRadius);
  EXPECT_NEAR(eval_pfq(p, 0.5).value, 4.0, 1e-13);
}

TEST(EvalPfq, TerminatingSeriesStopsAtZeroTerm) {
  // 2F1(-3, 1; 2; x) = 1 - 1.5x + x^2 - 0.25x^3
  const auto r = eval_pfq(HypergeometricParams({-3.0, 1.0}, {2.0}), 0.5);
  EXPECT_NEAR(r.value, 1.0 - 0.75 + 0.25 - 0.03125, 1e-15);
  EXPECT_EQ(r.terms_used, 5);
  EXPECT_TRUE(r.converged);
}

TEST(EvalPfq, ComplexArgument) {
  const auto r = eval_pfq(HypergeometricParams({}, {}), Complex{0.3, 1.2});
  EXPECT_LE(std::abs(r.value - std::exp(Complex{0.3, 1.2})), 1e-15);
}

TEST(EvalPfq, TermCapRaisesNotConverged) {
  SeriesOptions opts;
  opts.max_terms = 5;
  EXPECT_THROW(eval_pfq(HypergeometricParams({}, {}), 10.0, opts), NotConverged);
}

TEST(EvalPfq, MonotoneTruncationForPositiveArguments) {
  const HypergeometricParams p({0.5}, {1.5});
  double previous = 0.0;
  for (int cap : {60, 120, 240, 480}) {
    SeriesOptions opts;
    opts.max_terms = cap;
    const double v = eval_pfq(p, 8.0, opts).value;
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(ClosedForm, SpecExamples) {
  EXPECT_NEAR(*closed_form(HypergeometricParams({2.0}, {}), 0.5), 4.0, 1e-15);
  EXPECT_EQ(*closed_form(HypergeometricParams({}, {}), 0.0), 1.0);
  EXPECT_LE(rel(*closed_form(HypergeometricParams({1.0}, {1.5}), 1.0), kConfluentHalfAtOne),
            1e-14);
  EXPECT_THROW(closed_form(HypergeometricParams({2.0}, {}), 1.0), OutOfRadius);
  EXPECT_FALSE(closed_form(HypergeometricParams({0.3}, {2.0}), 1.0).has_value());
}

TEST(ClosedForm, ErfFormAgainstIndependentErfValues) {
  // sqrt(pi)/(2 sqrt(x)) e^x erf(sqrt(x)) with mpmath erf values.
  const std::vector<std::pair<double, double>> table{{0.25, 1.1845930729386531513},
                                                     {1.0, 2.0300784692787049755},
                                                     {4.0, 24.080006057145614874}};
  const HypergeometricParams p({1.0}, {1.5});
  for (const auto& [x, expected] : table) {
    EXPECT_LE(rel(*closed_form(p, x), expected), 1e-13) << x;
    EXPECT_LE(rel(eval_pfq(p, x).value, expected), 1e-10) << x;
  }
}

TEST(ClosedForm, AgreesWithSeriesInsideRadius) {
  const std::vector<HypergeometricParams> patterns{
      HypergeometricParams({}, {}), HypergeometricParams({2.0}, {}), HypergeometricParams({0.7}, {}),
      HypergeometricParams({1.0}, {1.5}), HypergeometricParams({1.0}, {2.0})};
  for (const auto& p : patterns) {
    const double top = convergence_radius(p) == 1.0 ? 0.9 : 8.0;
    for (int i = 0; i <= 16; ++i) {
      const double x = top * i / 16.0;
      const auto closed = closed_form(p, x);
      ASSERT_TRUE(closed.has_value());
      EXPECT_LE(rel(eval_pfq(p, x).value, *closed), 1e-10) << x;
    }
  }
}

TEST(OdeResidual, SpecExamples) {
  EXPECT_LE(ode_residual_coefficients(HypergeometricParams({1.0}, {1.5}), 50), 1e-14);
  EXPECT_LE(ode_residual_coefficients(HypergeometricParams({}, {2.0}), 50), 1e-14);
  EXPECT_LE(ode_residual_coefficients(HypergeometricParams({2.0}, {}), 50), 1e-14);
  EXPECT_THROW(ode_residual_coefficients(HypergeometricParams({}, {}), 0), std::invalid_argument);
}

TEST(Asymptotic1F1, SpecExamples) {
  for (double x : {1.0, 10.0, 40.0}) EXPECT_LE(rel(asymptotic_1f1(1.0, 1.0, x), std::exp(x)), 1e-14);
  EXPECT_LE(rel(asymptotic_1f1(1.0, 1.5, 30.0), eval_pfq(HypergeometricParams({1.0}, {1.5}), 30.0).value),
            0.02);
  const double log_exact = std::log(std::expm1(50.0) / 50.0);
  EXPECT_LE(std::abs(std::expm1(asymptotic_1f1_log(1.0, 2.0, 50.0) - log_exact)), 0.02);
  EXPECT_THROW(asymptotic_1f1(1.0, 2.0, -1.0), std::domain_error);
}

TEST(Kind, StringRoundTrip) {
  for (Kind k : {Kind::BG, Kind::KP, Kind::GK}) EXPECT_EQ(kind_from_string(to_string(k)), k);
  EXPECT_THROW(kind_from_string("XY"), std::invalid_argument);
}
