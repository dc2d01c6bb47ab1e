#include "ghcs/bloch.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ghcs/power_series.hpp"

namespace ghcs {

namespace {

constexpr int kProductStartOrder = 32;
constexpr int kProductMaxOrder = 4096;

double thermal_argument_bound(const CSFamily& family, double abs_u, double eps) {
  const double growth = thermal_growth(family.spectrum());
  if (eps == 0.0 || growth == 0.0) return abs_u;
  if (std::isinf(growth)) return 0.0;
  return abs_u * std::exp(-eps * growth);
}

Complex hamiltonian_sum(const EnergySpectrum& spectrum, const CSFamily& family, double eps,
                        const KernelArgument& arg, const SeriesOptions& opts) {
  const auto r = family_series(
      family, arg,
      [&](int n) {
        const double e = thermal_energy(spectrum, n);
        return e * std::exp(-eps * e);
      },
      thermal_argument_bound(family, std::abs(arg.u), eps), opts);
  return r.value;
}

/// exp(-eps e0) 1F1(1; e0+1; exp(-eps) x)
double definition_route(double e0, double eps, double x) {
  const HypergeometricParams params({1.0}, {e0 + 1.0});
  return std::exp(-eps * e0) * eval_pfq(params, std::exp(-eps) * x).value;
}

/// Evaluates (1F1 series) * (exp series) at x, raising the order until the
/// last retained coefficient stops mattering.
double product_route(double e0, double eps, double x) {
  const HypergeometricParams params({1.0}, {e0 + 1.0});
  const double c = std::expm1(-eps);
  for (int N = kProductStartOrder; N <= kProductMaxOrder; N *= 2) {
    const auto product = cauchy_product(pfq_series(params, N), exp_series(c, N), N);
    const double value = evaluate(product, x);
    const double tail = std::abs(product.coefficients[N] * std::pow(x, N));
    if (tail <= 1e-17 * std::abs(value)) return value;
  }
  throw NotConverged("audit: Cauchy product did not settle");
}

}  // namespace

Complex apply_hamiltonian_series(const EnergySpectrum& spectrum, const CSFamily& family,
                                 double eps, Complex x, const SeriesOptions& opts) {
  if (!(eps >= 0.0)) throw std::invalid_argument("apply_hamiltonian_series: eps < 0");
  return hamiltonian_sum(spectrum, family, eps, KernelArgument{x, 0.0}, opts);
}

Complex apply_hamiltonian_series(const CSFamily& family, const ThermalQuery& q,
                                 const SeriesOptions& opts) {
  if (!(q.eps >= 0.0)) throw std::invalid_argument("apply_hamiltonian_series: eps < 0");
  return hamiltonian_sum(family.spectrum(), family, q.eps, kernel_argument(family, q.z, q.zp),
                         opts);
}

BlochResidual bloch_residual(const CSFamily& family, const ThermalQuery& q, double fd_step,
                             const SeriesOptions& opts) {
  if (!(fd_step > 0.0)) throw std::invalid_argument("bloch_residual: fd_step must be > 0");
  if (q.eps < fd_step) throw std::invalid_argument("bloch_residual: eps < fd_step");
  ThermalQuery up = q;
  ThermalQuery down = q;
  up.eps += fd_step;
  down.eps -= fd_step;
  BlochResidual out;
  out.fd_step = fd_step;
  out.lhs = -(omega_element(family, up, opts).value - omega_element(family, down, opts).value) /
            (2.0 * fd_step);
  out.rhs = apply_hamiltonian_series(family, q, opts);
  out.abs_residual = std::abs(out.lhs - out.rhs);
  out.rel_residual =
      out.abs_residual / std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
  return out;
}

VerificationReport closed_form_solution_check(const std::vector<double>& eps_grid,
                                              const std::vector<Complex>& x_grid,
                                              double tolerance) {
  const CSFamily oscillator(Kind::BG, HypergeometricParams({}, {}), EnergySpectrum::linear(0.0));
  VerificationReport report;
  report.name = "oscillator closed form";
  report.tolerance = tolerance;
  for (double eps : eps_grid) {
    for (Complex x : x_grid) {
      // z = 1, zp = x puts x into the product variable.
      const Complex series = omega_element(oscillator, {eps, Complex{1.0, 0.0}, x}).value;
      const Complex exact = std::exp(std::exp(-eps) * x);
      std::ostringstream label;
      label.precision(17);
      label << "eps=" << eps << " x=" << x.real();
      if (x.imag() != 0.0) label << (x.imag() > 0 ? "+" : "") << x.imag() << "i";
      report.add(label.str(), std::abs(series), std::abs(exact),
                 std::abs(series - exact) / std::abs(exact));
    }
  }
  return report;
}

IdentityAudit audit_rescaling_identity(double e0, double eps, double x, AuditRoute route) {
  if (!(e0 >= 0.0)) throw std::invalid_argument("audit: e0 < 0");
  IdentityAudit out;
  out.exact_expected = e0 == 0.0;
  out.lhs = definition_route(e0, eps, x);
  const double shift = std::exp(-eps * e0);
  if (route == AuditRoute::CauchyProduct) {
    out.rhs = product_route(e0, eps, x) * shift;
  } else {
    const HypergeometricParams params({1.0}, {e0 + 1.0});
    out.rhs = eval_pfq(params, x).value * std::exp(std::expm1(-eps) * x) * shift;
  }
  out.abs_diff = std::abs(out.lhs - out.rhs);
  return out;
}

IdentityAudit audit_kernel_ratio(double e0, double eps, double x) {
  if (!(e0 >= 0.0)) throw std::invalid_argument("audit: e0 < 0");
  const HypergeometricParams params({1.0}, {e0 + 1.0});
  IdentityAudit out;
  out.exact_expected = e0 == 0.0;
  out.lhs = eval_pfq(params, std::exp(-eps) * x).value / eval_pfq(params, x).value;
  out.rhs = std::exp(std::expm1(-eps) * x);
  out.abs_diff = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace ghcs
