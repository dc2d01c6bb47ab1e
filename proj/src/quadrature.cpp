#include "ghcs/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ghcs {

namespace {

using Key = std::tuple<int, int, double>;

/// Orthonormal polynomials from the Jacobi matrix (diag a, off b, b[k-1]
/// couples k-1 and k). Values are rescaled on the fly; only ratios and
/// log-magnitudes leave this function.
struct Christoffel {
  double newton_step = 0.0;
  double log_weight = 0.0;
};

Christoffel christoffel(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double mu0, int n,
                        double x) {
  constexpr double kBig = 1e100;
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(mu0);
  double d_prev = 0.0;
  double d = 0.0;
  double sum = p * p;
  double log_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const double b_prev = k > 0 ? b[k - 1] : 0.0;
    const double p_next = ((x - a[k]) * p - b_prev * p_prev) / b[k];
    const double d_next = (p + (x - a[k]) * d - b_prev * d_prev) / b[k];
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (k + 1 < n) sum += p * p;
    if (std::abs(p) > kBig || std::abs(d) > kBig) {
      p /= kBig;
      p_prev /= kBig;
      d /= kBig;
      d_prev /= kBig;
      sum /= kBig * kBig;
      log_scale += std::log(kBig);
    }
  }
  return {p / d, -std::log(sum) - 2.0 * log_scale};
}

/// Golub-Welsch nodes, polished by Newton on p_n, with Christoffel weights.
/// a has n + 1 entries and b has n entries so that p_n is available.
QuadratureRule golub_welsch(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double mu0,
                            int n) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(a.head(n), b.head(n - 1), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("quadrature: tridiagonal eigensolver failed");
  }
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) x -= christoffel(a, b, mu0, n, x).newton_step;
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(christoffel(a, b, mu0, n, x).log_weight);
  }
  return rule;
}

QuadratureRule laguerre(int n, double alpha) {
  Eigen::VectorXd diag(n + 1);
  Eigen::VectorXd off(n);
  for (int i = 0; i <= n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i <= n; ++i) off[i - 1] = std::sqrt(i * (i + alpha));
  return golub_welsch(diag, off, std::tgamma(alpha + 1.0), n);
}

/// Jacobi weight (1 - x)^alpha on [-1, 1], mapped to (1 - t)^alpha on [0, 1].
QuadratureRule jacobi_unit(int n, double alpha) {
  const double beta = 0.0;
  const double s = alpha + beta;
  Eigen::VectorXd diag(n + 1);
  Eigen::VectorXd off(n);
  diag[0] = (beta - alpha) / (s + 2.0);
  for (int i = 1; i <= n; ++i) {
    const double d = 2.0 * i + s;
    diag[i] = (beta * beta - alpha * alpha) / (d * (d + 2.0));
    off[i - 1] = std::sqrt(4.0 * i * (i + alpha) * (i + beta) * (i + s) /
                           (d * d * (d + 1.0) * (d - 1.0)));
  }
  const double mu0 = std::exp((s + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(s + 2.0));
  auto rule = golub_welsch(diag, off, mu0, n);
  rule.nodes = (rule.nodes.array() + 1.0) / 2.0;
  rule.weights /= std::pow(2.0, alpha + 1.0);
  return rule;
}

}  // namespace

std::string to_string(QuadratureScheme scheme) {
  return scheme == QuadratureScheme::FiniteInterval ? "finite-interval" : "semi-infinite";
}

std::shared_ptr<const QuadratureRule> quadrature_rule(const QuadratureSpec& spec) {
  if (spec.node_count < 2) throw std::invalid_argument("quadrature: node_count must be >= 2");
  if (!(spec.alpha > -1.0)) throw std::invalid_argument("quadrature: alpha must be > -1");

  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  const Key key{static_cast<int>(spec.scheme), spec.node_count, spec.alpha};
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto rule = std::make_shared<QuadratureRule>(spec.scheme == QuadratureScheme::SemiInfinite
                                                   ? laguerre(spec.node_count, spec.alpha)
                                                   : jacobi_unit(spec.node_count, spec.alpha));
  assert((rule->weights.array() >= 0.0).all());
  if (!(rule->weights.array() >= 0.0).all()) {
    throw std::runtime_error("quadrature: negative weight generated");
  }
  cache.emplace(key, rule);
  return rule;
}

double log_base_weight(const QuadratureSpec& spec, double t) {
  if (spec.scheme == QuadratureScheme::SemiInfinite) return spec.alpha * std::log(t) - t;
  return spec.alpha * std::log1p(-t);
}

}  // namespace ghcs
