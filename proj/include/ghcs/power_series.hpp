#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <stdexcept>

#include "ghcs/pfq.hpp"

namespace ghcs {

/// Truncated power series sum_{n<=order} c_n x^n.
template <typename Scalar>
struct PowerSeries {
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Coefficients coefficients;
  double radius = kInfinity;

  Eigen::Index order() const { return coefficients.size() - 1; }
};

using RealSeries = PowerSeries<double>;
using ComplexSeries = PowerSeries<Complex>;

/// Horner evaluation of the retained terms.
template <typename Scalar, typename Arg>
auto evaluate(const PowerSeries<Scalar>& s, Arg x) {
  using Out = decltype(Scalar{} * x);
  Out acc{};
  for (Eigen::Index n = s.coefficients.size() - 1; n >= 0; --n) acc = acc * x + s.coefficients[n];
  return acc;
}

/// Coefficients 1/rho_BG(n) of pFq(a; b; x), n <= N.
inline RealSeries pfq_series(const HypergeometricParams& params, int N) {
  RealSeries s;
  s.coefficients.resize(N + 1);
  s.radius = convergence_radius(params);
  double c = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      const double m = n - 1;
      c *= params.upper_product(m) / ((m + 1.0) * params.lower_product(m));
    }
    s.coefficients[n] = c;
  }
  return s;
}

/// Coefficients of exp(scale * x), n <= N.
template <typename Scalar = double>
PowerSeries<Scalar> exp_series(Scalar scale, int N) {
  PowerSeries<Scalar> s;
  s.coefficients.resize(N + 1);
  Scalar c{1.0};
  for (int n = 0; n <= N; ++n) {
    if (n > 0) c *= scale / static_cast<double>(n);
    s.coefficients[n] = c;
  }
  return s;
}

/// Coefficient k of the result is sum_{j<=k} s1_j s2_{k-j}, k <= N.
template <typename Scalar>
PowerSeries<Scalar> cauchy_product(const PowerSeries<Scalar>& s1, const PowerSeries<Scalar>& s2,
                                   int N) {
  if (s1.order() < N || s2.order() < N) {
    throw std::invalid_argument("cauchy_product: operands truncated below the requested order");
  }
  PowerSeries<Scalar> out;
  out.coefficients = PowerSeries<Scalar>::Coefficients::Zero(N + 1);
  out.radius = std::min(s1.radius, s2.radius);
  for (int k = 0; k <= N; ++k) {
    Scalar acc{};
    for (int j = 0; j <= k; ++j) acc += s1.coefficients[j] * s2.coefficients[k - j];
    out.coefficients[k] = acc;
  }
  return out;
}

/// f(x d/dx) acting on a series: multiplies coefficient n by f(n).
template <typename Scalar, typename F>
PowerSeries<Scalar> apply_euler_operator(const PowerSeries<Scalar>& s, F&& f) {
  PowerSeries<Scalar> out = s;
  for (Eigen::Index n = 0; n < s.coefficients.size(); ++n) {
    out.coefficients[n] *= f(static_cast<double>(n));
  }
  return out;
}

}  // namespace ghcs
