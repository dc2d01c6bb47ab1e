#include "ghcs/unity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ghcs {

namespace {

std::vector<double> quadrature_moments(const WeightPreset& preset, int n_max,
                                       const QuadratureSpec& quad) {
  if (n_max < 0) throw std::invalid_argument("moments: n_max < 0");
  if ((quad.scheme == QuadratureScheme::FiniteInterval) != (preset.support_limit() == 1.0)) {
    throw std::invalid_argument("moments: quadrature scheme does not match the preset support");
  }
  const auto rule = quadrature_rule(quad);
  std::vector<double> moments(n_max + 1, 0.0);
  for (Eigen::Index i = 0; i < rule->nodes.size(); ++i) {
    const double t = rule->nodes[i];
    const double w = rule->weights[i];
    if (w == 0.0) continue;
    const double ratio = std::exp(log_weight_density(preset, t) - log_base_weight(quad, t));
    double tn = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      moments[n] += w * ratio * tn;
      tn *= t;
    }
  }
  return moments;
}

double worst_error(const WeightPreset& preset, int n_max, const QuadratureSpec& quad) {
  const auto m = quadrature_moments(preset, n_max, quad);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    worst = std::max(worst, std::abs(m[n] / preset.target_moment(n) - 1.0));
  }
  return worst;
}

std::string n_label(int n) { return "n=" + std::to_string(n); }

}  // namespace

WeightPreset WeightPreset::ho() { return {Type::HO, 0.0}; }

WeightPreset WeightPreset::bg_pho(double k) {
  if (!(k > -1.0) || !std::isfinite(k)) throw std::invalid_argument("BG-PHO weight needs k > -1");
  return {Type::BGPHO, k};
}

WeightPreset WeightPreset::kp_pho(double k) {
  if (!(k > 0.5) || !std::isfinite(k)) {
    throw std::invalid_argument("KP-PHO weight needs k > 1/2 for an integrable density");
  }
  return {Type::KPPHO, k};
}

std::string WeightPreset::name() const {
  switch (type_) {
    case Type::HO:
      return "ho";
    case Type::BGPHO:
      return "pho-bg";
    case Type::KPPHO:
      return "pho-kp";
  }
  return "";
}

double WeightPreset::support_limit() const { return type_ == Type::KPPHO ? 1.0 : kInfinity; }

double WeightPreset::target_moment(int n) const {
  switch (type_) {
    case Type::HO:
      return std::tgamma(n + 1.0);
    case Type::BGPHO:
      return pochhammer(k_ + 1.0, n);
    case Type::KPPHO:
      return std::tgamma(n + 1.0) / pochhammer(2.0 * k_, n);
  }
  return 0.0;
}

QuadratureSpec WeightPreset::matched_quadrature(int node_count) const {
  switch (type_) {
    case Type::HO:
      return {node_count, QuadratureScheme::SemiInfinite, 0.0};
    case Type::BGPHO:
      return {node_count, QuadratureScheme::SemiInfinite, k_};
    case Type::KPPHO:
      return {node_count, QuadratureScheme::FiniteInterval, 2.0 * k_ - 2.0};
  }
  return {};
}

double log_weight_density(const WeightPreset& preset, double t) {
  if (!(t >= 0.0) || !(t < preset.support_limit())) {
    std::ostringstream msg;
    msg << "weight_density: t = " << t << " outside the support of " << preset.name();
    throw OutOfSupport(msg.str());
  }
  const double k = preset.k();
  switch (preset.type()) {
    case WeightPreset::Type::HO:
      return -t;
    case WeightPreset::Type::BGPHO:
      return k * std::log(t) - t - std::lgamma(k + 1.0);
    case WeightPreset::Type::KPPHO:
      return std::log(2.0 * k - 1.0) + (2.0 * k - 2.0) * std::log1p(-t);
  }
  return 0.0;
}

double weight_density(const WeightPreset& preset, double t) {
  return std::exp(log_weight_density(preset, t));
}

VerificationReport moment_check(const WeightPreset& preset, int n_max, const QuadratureSpec& quad,
                                double tolerance) {
  const auto moments = quadrature_moments(preset, n_max, quad);
  VerificationReport report;
  report.name = "moments " + preset.name();
  report.tolerance = tolerance;
  for (int n = 0; n <= n_max; ++n) {
    const double target = preset.target_moment(n);
    report.add(n_label(n), moments[n], target, std::abs(moments[n] / target - 1.0));
  }
  if (!report.passed() && quad.node_count >= 4) {
    QuadratureSpec coarse = quad;
    coarse.node_count = quad.node_count / 2;
    if (!(report.max_error() < worst_error(preset, n_max, coarse))) {
      throw QuadratureUnderResolved("moment_check: error did not shrink from " +
                                    std::to_string(coarse.node_count) + " to " +
                                    std::to_string(quad.node_count) + " nodes");
    }
  }
  return report;
}

MomentConvergence moment_convergence(const WeightPreset& preset, int n_max,
                                     const QuadratureSpec& finest, double floor) {
  std::vector<int> counts;
  for (int n = finest.node_count; n >= 2; n /= 2) counts.insert(counts.begin(), n);
  MomentConvergence out;
  for (int n : counts) {
    QuadratureSpec spec = finest;
    spec.node_count = n;
    out.steps.push_back({n, worst_error(preset, n_max, spec)});
  }
  for (std::size_t i = 1; i < out.steps.size(); ++i) {
    const double prev = out.steps[i - 1].worst_error;
    const double cur = out.steps[i].worst_error;
    if (prev > floor && !(cur <= 0.5 * prev) && cur > floor) out.monotone = false;
  }
  return out;
}

VerificationReport unity_reconstruction_check(const CSFamily& family, const WeightPreset& preset,
                                              int N, const QuadratureSpec& quad,
                                              double tolerance) {
  for (int n = 0; n <= std::min(N, 4); ++n) {
    if (std::abs(family.rho(n) / preset.target_moment(n) - 1.0) > 1e-12) {
      throw std::invalid_argument("unity_reconstruction_check: weight does not match the family");
    }
  }
  const auto report_moments = moment_check(preset, N, quad, tolerance);
  VerificationReport report;
  report.name = "unity " + preset.name();
  report.tolerance = tolerance;
  for (int n = 0; n <= N; ++n) {
    const double diag = report_moments.entries[n].value / family.rho(n);
    report.add(n_label(n), diag, 1.0, std::abs(diag - 1.0));
  }
  return report;
}

}  // namespace ghcs
