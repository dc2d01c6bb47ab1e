#include <gtest/gtest.h>

#include <random>

#include "ghcs/power_series.hpp"

using namespace ghcs;

TEST(CauchyProduct, ExpTimesInverseExpIsOne) {
  const auto p = cauchy_product(exp_series(1.0, 10), exp_series(-1.0, 10), 10);
  EXPECT_NEAR(p.coefficients[0], 1.0, 1e-15);
  for (int k = 1; k <= 10; ++k) EXPECT_NEAR(p.coefficients[k], 0.0, 1e-14) << k;
}

TEST(CauchyProduct, UnitSeriesIsIdentity) {
  RealSeries one;
  one.coefficients = Eigen::VectorXd::Zero(12);
  one.coefficients[0] = 1.0;
  const auto s2 = pfq_series(HypergeometricParams({0.5}, {1.5}), 15);
  const auto p = cauchy_product(one, s2, 11);
  ASSERT_EQ(p.order(), 11);
  for (int k = 0; k <= 11; ++k) EXPECT_EQ(p.coefficients[k], s2.coefficients[k]);
}

TEST(CauchyProduct, ConfluentTimesExponentialAtOne) {
  // 1F1(1;1.5;1) e^{-0.5}, mpmath
  const auto p = cauchy_product(pfq_series(HypergeometricParams({1.0}, {1.5}), 40),
                                exp_series(-0.5, 40), 40);
  EXPECT_NEAR(evaluate(p, 1.0), 1.2313048332400259532, 1e-14);
}

TEST(CauchyProduct, RejectsShortOperands) {
  EXPECT_THROW(cauchy_product(exp_series(1.0, 5), exp_series(1.0, 10), 8), std::invalid_argument);
}

TEST(CauchyProduct, RadiusIsTheSmallerOne) {
  const auto p = cauchy_product(pfq_series(HypergeometricParams({2.0}, {}), 8), exp_series(1.0, 8), 8);
  EXPECT_EQ(p.radius, 1.0);
}

TEST(PowerSeries, PfqSeriesMatchesEvaluation) {
  const HypergeometricParams params({0.7, 1.1}, {2.3});
  const auto s = pfq_series(params, 200);
  EXPECT_NEAR(evaluate(s, 0.6), eval_pfq(params, 0.6).value, 1e-14);
  EXPECT_NEAR(std::abs(evaluate(s, Complex{0.2, 0.5}) - eval_pfq(params, Complex{0.2, 0.5}).value), 0.0,
              1e-14);
}

TEST(EulerOperator, CoefficientWiseActionEqualsDirectSum) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> param(0.2, 3.0);
  std::uniform_real_distribution<double> arg(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const HypergeometricParams params({param(rng)}, {param(rng), param(rng)});
    const auto s = pfq_series(params, 60);
    const double x = arg(rng);
    auto f = [](double n) { return n * n + 0.5 * n + 2.0; };
    const double via_operator = evaluate(apply_euler_operator(s, f), x);
    double direct = 0.0;
    double xn = 1.0;
    for (int n = 0; n <= 60; ++n) {
      direct += f(n) * s.coefficients[n] * xn;
      xn *= x;
    }
    EXPECT_NEAR(via_operator, direct, 1e-13 * std::abs(direct));
  }
}

TEST(EulerOperator, NumberOperatorOnExponentialGivesXTimesExp) {
  const auto s = apply_euler_operator(exp_series(1.0, 40), [](double n) { return n; });
  EXPECT_NEAR(evaluate(s, 1.0), std::exp(1.0), 1e-14);
}
