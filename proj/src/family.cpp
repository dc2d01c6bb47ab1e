#include "ghcs/family.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace ghcs {

namespace {

constexpr int kDirectLimit = 150;
constexpr int kAutoStartOrder = 64;
constexpr double kAutoTailRatio = 1e-30;

Complex ipow(Complex z, int n) {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

double radius_for(Kind kind, const HypergeometricParams& params, const EnergySpectrum& spectrum) {
  switch (kind) {
    case Kind::BG:
      return convergence_radius(params);
    case Kind::KP: {
      for (double v : params.a()) {
        if (is_nonpositive_integer(v)) {
          throw std::invalid_argument("KP family: numerator parameter is zero or a negative integer");
        }
      }
      if (params.q() > params.p() + 1) {
        throw std::invalid_argument("KP family: dual series qFp has zero radius (q > p + 1)");
      }
      return params.q() <= params.p() ? kInfinity : 1.0;
    }
    case Kind::GK:
      if (!(thermal_growth(spectrum) > 0.0)) {
        throw std::invalid_argument("GK family needs an unbounded spectrum");
      }
      return kInfinity;
  }
  return 0.0;
}

}  // namespace

CSFamily::CSFamily(Kind kind, HypergeometricParams params, EnergySpectrum spectrum)
    : kind_(kind),
      params_(std::move(params)),
      spectrum_(std::move(spectrum)),
      radius_(radius_for(kind_, params_, spectrum_)) {}

double CSFamily::rho(int n) const {
  if (kind_ != Kind::GK) return structure_constant(params_, kind_, n);
  if (n < 0) throw std::invalid_argument("rho: negative n");
  double r = 1.0;
  for (int m = 1; m <= n; ++m) r *= energy_eigenvalue(spectrum_, m);
  if (!std::isfinite(r)) throw std::overflow_error("rho: overflows, use log_rho");
  return r;
}

SignedLog CSFamily::log_rho(int n) const {
  if (kind_ != Kind::GK) return structure_constant_log(params_, kind_, n);
  if (n < 0) throw std::invalid_argument("log_rho: negative n");
  SignedLog out;
  for (int m = 1; m <= n; ++m) out.log_abs += std::log(energy_eigenvalue(spectrum_, m));
  return out;
}

double CSFamily::inverse_structure_energy(int m) const {
  if (m < 1) throw std::invalid_argument("structure energy needs m >= 1");
  const double k = m - 1;
  switch (kind_) {
    case Kind::BG:
      return params_.upper_product(k) / (m * params_.lower_product(k));
    case Kind::KP:
      return params_.lower_product(k) / (m * params_.upper_product(k));
    case Kind::GK:
      return 1.0 / energy_eigenvalue(spectrum_, m);
  }
  return 0.0;
}

double CSFamily::structure_energy(int m) const { return 1.0 / inverse_structure_energy(m); }

KernelArgument kernel_argument(const CSFamily& family, Complex z, Complex zp) {
  if (family.kind() != Kind::GK) return {std::conj(z) * zp, 0.0};
  const auto bra = GKLabel::from_complex(z);
  const auto ket = GKLabel::from_complex(zp);
  return {Complex{std::abs(z) * std::abs(zp), 0.0}, bra.gamma - ket.gamma};
}

Complex cs_coefficient(const CSFamily& family, int n, const GKLabel& label) {
  if (n < 0) throw std::invalid_argument("cs_coefficient: negative n");
  if (n == 0) return {1.0, 0.0};
  const double phase = -label.gamma * energy_eigenvalue(family.spectrum(), n);
  if (label.J == 0.0) return {0.0, 0.0};
  if (n <= kDirectLimit) {
    return std::polar(std::pow(std::sqrt(label.J), n) / std::sqrt(family.rho(n)), phase);
  }
  const double log_mag = 0.5 * n * std::log(label.J) - 0.5 * family.log_rho(n).log_abs;
  return std::polar(std::exp(log_mag), phase);
}

Complex cs_coefficient(const CSFamily& family, int n, Complex z) {
  if (family.kind() == Kind::GK) return cs_coefficient(family, n, GKLabel::from_complex(z));
  if (n < 0) throw std::invalid_argument("cs_coefficient: negative n");
  if (n == 0) return {1.0, 0.0};
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
  if (n <= kDirectLimit) return ipow(z, n) / std::sqrt(family.rho(n));
  const auto lr = family.log_rho(n);
  return std::polar(std::exp(n * std::log(std::abs(z)) - 0.5 * lr.log_abs), n * std::arg(z));
}

FockExpansion fock_expansion(const CSFamily& family, Complex z, int N) {
  if (N < 0) throw std::invalid_argument("fock_expansion: negative order");
  check_radius(family.radius(), std::norm(z), SeriesOptions{}, "fock_expansion");
  FockExpansion out;
  out.coefficients.resize(N + 1);
  for (int n = 0; n <= N; ++n) out.coefficients[n] = cs_coefficient(family, n, z);
  return out;
}

FockExpansion fock_expansion(const CSFamily& family, Complex z) {
  const int cap = SeriesOptions{}.max_terms;
  for (int N = kAutoStartOrder; N <= cap; N *= 2) {
    auto out = fock_expansion(family, z, N);
    const double norm = out.coefficients.squaredNorm();
    if (std::norm(out.coefficients[N]) <= kAutoTailRatio * norm) return out;
  }
  throw NotConverged("fock_expansion: coefficients still significant at the order cap");
}

FockExpansion ladder_down(const CSFamily& family, const FockExpansion& in) {
  const Eigen::Index size = std::max<Eigen::Index>(in.coefficients.size() - 1, 1);
  FockExpansion out;
  out.coefficients = Eigen::VectorXcd::Zero(size);
  for (Eigen::Index n = 0; n + 1 < in.coefficients.size(); ++n) {
    out.coefficients[n] =
        std::sqrt(family.structure_energy(static_cast<int>(n) + 1)) * in.coefficients[n + 1];
  }
  return out;
}

FockExpansion ladder_up(const CSFamily& family, const FockExpansion& in) {
  FockExpansion out;
  out.coefficients = Eigen::VectorXcd::Zero(in.coefficients.size());
  for (Eigen::Index n = 0; n + 1 < in.coefficients.size(); ++n) {
    out.coefficients[n + 1] =
        std::sqrt(family.structure_energy(static_cast<int>(n) + 1)) * in.coefficients[n];
  }
  return out;
}

FockExpansion build_state_by_ladder(const CSFamily& family, Complex z, int N) {
  if (N < 0) throw std::invalid_argument("build_state_by_ladder: negative order");
  FockExpansion power;
  power.coefficients = Eigen::VectorXcd::Zero(N + 1);
  power.coefficients[0] = 1.0;
  FockExpansion out = power;
  const bool gk = family.kind() == Kind::GK;
  const auto label = GKLabel::from_complex(z);
  Complex zn{1.0, 0.0};
  for (int n = 1; n <= N; ++n) {
    power = ladder_up(family, power);
    Complex factor;
    if (gk) {
      factor = std::polar(std::pow(std::sqrt(label.J), n),
                          -label.gamma * energy_eigenvalue(family.spectrum(), n));
    } else {
      zn *= z;
      factor = zn;
    }
    out.coefficients += (factor / family.rho(n)) * power.coefficients;
  }
  return out;
}

EvalResult<Complex> overlap_series(const CSFamily& family, Complex z, Complex zp,
                                   const SeriesOptions& opts) {
  const auto arg = kernel_argument(family, z, zp);
  return family_series(family, arg, [](int) { return 1.0; }, std::abs(arg.u), opts);
}

Complex overlap(const CSFamily& family, Complex z, Complex zp, const SeriesOptions& opts) {
  return overlap_series(family, z, zp, opts).value;
}

double action_identity(const CSFamily& family, double zsq, const SeriesOptions& opts) {
  if (family.kind() != Kind::BG) {
    throw std::invalid_argument("action_identity: defined for BG families");
  }
  if (zsq < 0.0) throw std::invalid_argument("action_identity: |z|^2 < 0");
  const KernelArgument arg{Complex{zsq, 0.0}, 0.0};
  const auto& spectrum = family.spectrum();
  const auto numerator = family_series(
      family, arg, [&](int n) { return n == 0 ? 0.0 : energy_eigenvalue(spectrum, n); }, zsq,
      opts);
  const auto kernel = family_series(family, arg, [](int) { return 1.0; }, zsq, opts);
  return numerator.value.real() / kernel.value.real();
}

VerificationReport duality_check(const HypergeometricParams& params, int n_max,
                                 double tolerance) {
  VerificationReport report;
  report.name = "duality";
  report.tolerance = tolerance;
  double factorial = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= n;
    const double product =
        structure_constant(params, Kind::BG, n) * structure_constant(params, Kind::KP, n);
    const double ratio = product / (factorial * factorial);
    std::ostringstream label;
    label << "n=" << n;
    report.add(label.str(), ratio, 1.0, std::abs(ratio - 1.0));
  }
  return report;
}

}  // namespace ghcs
