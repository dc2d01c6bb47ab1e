#include "ghcs/thermal.hpp"

#include <stdexcept>

namespace ghcs {

namespace {

void require_eps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("inverse temperature eps must be finite and >= 0");
  }
}

/// E(n) = n + c for every n, or nothing.
std::optional<double> linear_offset(const EnergySpectrum& spectrum) {
  if (const auto* s = std::get_if<LinearSpectrum>(&spectrum.variant())) return s->e0;
  if (const auto* s = std::get_if<GKScaledSpectrum>(&spectrum.variant())) return s->k;
  return std::nullopt;
}

double effective_argument(const CSFamily& family, double abs_u, double eps) {
  const double growth = thermal_growth(family.spectrum());
  if (eps == 0.0 || growth == 0.0) return abs_u;
  if (std::isinf(growth)) return 0.0;
  return abs_u * std::exp(-eps * growth);
}

}  // namespace

std::string to_string(Route route) {
  return route == Route::ClosedForm ? "closed-form" : "definition-series";
}

std::optional<KernelForm> kernel_form(const CSFamily& family) {
  switch (family.kind()) {
    case Kind::BG:
      return KernelForm{family.params(), 1.0};
    case Kind::KP:
      return KernelForm{family.params().swapped(), 1.0};
    case Kind::GK: {
      // rho_GK(n) = s^n rho_BG(n) for some s, checked on the first few n.
      const auto& params = family.params();
      const double s = family.rho(1) / structure_constant(params, Kind::BG, 1);
      for (int n = 2; n <= 4; ++n) {
        const double expected = std::pow(s, n) * structure_constant(params, Kind::BG, n);
        if (std::abs(family.rho(n) / expected - 1.0) > 1e-12) return std::nullopt;
      }
      return KernelForm{params, 1.0 / s};
    }
  }
  return std::nullopt;
}

OmegaResult omega_element(const CSFamily& family, const ThermalQuery& q,
                          const SeriesOptions& opts) {
  require_eps(q.eps);
  const auto arg = kernel_argument(family, q.z, q.zp);
  const auto& spectrum = family.spectrum();
  const auto r = family_series(
      family, arg, [&](int n) { return std::exp(-q.eps * thermal_energy(spectrum, n)); },
      effective_argument(family, std::abs(arg.u), q.eps), opts);
  return {r.value, Route::DefinitionSeries, r.terms_used};
}

std::optional<OmegaResult> omega_rescaled(const CSFamily& family, const ThermalQuery& q,
                                          const SeriesOptions& opts) {
  require_eps(q.eps);
  const auto offset = linear_offset(family.spectrum());
  const auto form = kernel_form(family);
  const auto arg = kernel_argument(family, q.z, q.zp);
  if (!offset || !form || arg.phase_shift != 0.0) return std::nullopt;
  const Complex x = std::exp(-q.eps) * form->argument_scale * arg.u;
  const auto r = eval_pfq(form->params, x, opts);
  return OmegaResult{std::exp(-q.eps * *offset) * r.value, Route::DefinitionSeries, r.terms_used};
}

std::optional<OmegaResult> omega_closed_form(const CSFamily& family, const ThermalQuery& q) {
  require_eps(q.eps);
  const auto offset = linear_offset(family.spectrum());
  const auto form = kernel_form(family);
  const auto arg = kernel_argument(family, q.z, q.zp);
  if (!offset || !form || arg.phase_shift != 0.0 || arg.u.imag() != 0.0) return std::nullopt;
  const double x = std::exp(-q.eps) * form->argument_scale * arg.u.real();
  const auto value = closed_form(form->params, x);
  if (!value) return std::nullopt;
  return OmegaResult{Complex{std::exp(-q.eps * *offset) * *value, 0.0}, Route::ClosedForm, 0};
}

Complex omega_boundary(const CSFamily& family, Complex z, Complex zp, const SeriesOptions& opts) {
  return overlap(family, z, zp, opts);
}

double partition_function(const EnergySpectrum& spectrum, double eps, int n_max) {
  if (!(eps > 0.0)) throw std::invalid_argument("partition_function: eps must be > 0");
  if (n_max < 0) throw std::invalid_argument("partition_function: n_max < 0");
  double sum = 0.0;
  double last = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    last = std::exp(-eps * thermal_energy(spectrum, n));
    sum += last;
  }
  if (last > 1e-15 * sum) {
    throw NotConverged("partition_function: tail term at n_max still above 1e-15 of the sum");
  }
  return sum;
}

double partition_function_linear(double e0, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("partition_function_linear: eps must be > 0");
  return std::exp(-eps * e0) / -std::expm1(-eps);
}

double husimi_q(const CSFamily& family, double eps, double zsq, bool normalized,
                const SeriesOptions& opts) {
  if (zsq < 0.0) throw std::invalid_argument("husimi_q: |z|^2 < 0");
  const Complex z{std::sqrt(zsq), 0.0};
  const double numerator = omega_element(family, {eps, z, z}, opts).value.real();
  const double kernel = overlap(family, z, z, opts).real();
  double q = numerator / kernel;
  if (normalized) q /= partition_function(family.spectrum(), eps, opts.max_terms);
  return q;
}

Complex normalized_element(const CSFamily& family, const ThermalQuery& q,
                           const SeriesOptions& opts) {
  const Complex omega = omega_element(family, q, opts).value;
  const double kz = overlap(family, q.z, q.z, opts).real();
  const double kzp = overlap(family, q.zp, q.zp, opts).real();
  return omega / (std::sqrt(kz) * std::sqrt(kzp));
}

OscillatorNormalizedForms oscillator_normalized_forms(double eps, Complex z, Complex zp) {
  require_eps(eps);
  const Complex without =
      std::exp(-0.5 * (std::norm(z) + std::norm(zp)) + std::exp(-eps) * std::conj(z) * zp);
  return {without, std::exp(-0.5 * eps) * without};
}

double asymptotic_omega_linear_log(double e0, double eps, double x) {
  if (!(x > 0.0)) throw std::domain_error("asymptotic_omega_linear: x must be positive");
  return std::lgamma(e0 + 1.0) - eps * e0 + std::exp(-eps) * x - e0 * std::log(x);
}

double asymptotic_omega_linear(double e0, double eps, double x) {
  return std::exp(asymptotic_omega_linear_log(e0, eps, x));
}

}  // namespace ghcs
