#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>

namespace ghcs {

enum class QuadratureScheme {
  /// Gauss-Jacobi on [0, 1], weight (1 - t)^alpha; alpha = 0 is Gauss-Legendre.
  FiniteInterval,
  /// Gauss-Laguerre on [0, inf), weight t^alpha exp(-t).
  SemiInfinite,
};

std::string to_string(QuadratureScheme scheme);

struct QuadratureSpec {
  int node_count = 200;
  QuadratureScheme scheme = QuadratureScheme::SemiInfinite;
  double alpha = 0.0;
};

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Golub-Welsch nodes and weights. Rules are computed once per spec and
/// shared; concurrent callers are safe.
std::shared_ptr<const QuadratureRule> quadrature_rule(const QuadratureSpec& spec);

/// log of the base weight of the scheme at t.
double log_base_weight(const QuadratureSpec& spec, double t);

}  // namespace ghcs
