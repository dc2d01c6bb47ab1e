#pragma once

#include <string>
#include <vector>

#include "ghcs/family.hpp"
#include "ghcs/quadrature.hpp"
#include "ghcs/report.hpp"

namespace ghcs {

/// Radial weight h(t), t = |z|^2, whose power moments are rho(n).
class WeightPreset {
 public:
  enum class Type { HO, BGPHO, KPPHO };

  static WeightPreset ho();
  /// t^k exp(-t) / Gamma(k + 1), moments (k + 1)_n.
  static WeightPreset bg_pho(double k);
  /// (2k - 1)(1 - t)^(2k - 2) on [0, 1), moments n! / (2k)_n. Needs k > 1/2.
  static WeightPreset kp_pho(double k);

  Type type() const { return type_; }
  double k() const { return k_; }
  std::string name() const;
  /// Upper end of the support: 1 or infinity.
  double support_limit() const;
  double target_moment(int n) const;
  /// Quadrature whose base weight absorbs the density exactly.
  QuadratureSpec matched_quadrature(int node_count) const;

 private:
  WeightPreset(Type type, double k) : type_(type), k_(k) {}
  Type type_;
  double k_;
};

/// Throws OutOfSupport outside [0, support_limit).
double weight_density(const WeightPreset& preset, double t);
double log_weight_density(const WeightPreset& preset, double t);

/// quadrature(h t^n) against rho(n) for n <= n_max. Throws
/// QuadratureUnderResolved when the worst error exceeds the tolerance and
/// did not shrink relative to node_count / 2.
VerificationReport moment_check(const WeightPreset& preset, int n_max, const QuadratureSpec& quad,
                                double tolerance = 1e-8);

/// Worst moment error at each node count of a doubling ladder.
struct ConvergenceStep {
  int node_count = 0;
  double worst_error = 0.0;
};

struct MomentConvergence {
  std::vector<ConvergenceStep> steps;
  /// Every doubling cut the worst error by >= 2x, or it was already below the floor.
  bool monotone = true;
};

/// Ladder node_count, node_count/2, ... down to >= 2, reported from coarse to fine.
MomentConvergence moment_convergence(const WeightPreset& preset, int n_max,
                                     const QuadratureSpec& finest, double floor = 1e-12);

/// Diagonal of the resolution of unity after the angular integral:
/// quadrature(t^n h) / rho_family(n) = 1 for n <= N. Off-diagonal terms
/// vanish analytically and are never formed.
VerificationReport unity_reconstruction_check(const CSFamily& family, const WeightPreset& preset,
                                              int N, const QuadratureSpec& quad,
                                              double tolerance = 1e-8);

}  // namespace ghcs
