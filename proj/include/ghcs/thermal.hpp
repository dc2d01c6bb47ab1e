#pragma once

#include <optional>
#include <string>

#include "ghcs/family.hpp"

namespace ghcs {

/// eps = beta hbar omega, bra label z, ket label zp.
struct ThermalQuery {
  double eps = 0.0;
  Complex z{0.0, 0.0};
  Complex zp{0.0, 0.0};
};

enum class Route { DefinitionSeries, ClosedForm };

std::string to_string(Route route);

struct OmegaResult {
  Complex value{0.0, 0.0};
  Route route = Route::DefinitionSeries;
  int terms_used = 0;
};

/// ((z|exp(-beta H)|z')) = sum_n exp(-eps E(n)) (z* z')^n / rho(n).
OmegaResult omega_element(const CSFamily& family, const ThermalQuery& q,
                          const SeriesOptions& opts = {});

/// When E(n) = n + c: exp(-eps c) times the kernel pFq evaluated at exp(-eps) z* z'.
/// Evaluated through eval_pfq on the kernel parameters. Absent for other spectra.
std::optional<OmegaResult> omega_rescaled(const CSFamily& family, const ThermalQuery& q,
                                          const SeriesOptions& opts = {});

/// Same rescaling, finished with an elementary closed form when one is registered.
std::optional<OmegaResult> omega_closed_form(const CSFamily& family, const ThermalQuery& q);

/// Omega at eps = 0, i.e. the overlap kernel.
Complex omega_boundary(const CSFamily& family, Complex z, Complex zp,
                       const SeriesOptions& opts = {});

/// sum_{n=0}^{n_max} exp(-eps E(n)). Throws NotConverged if the term at n_max
/// exceeds 1e-15 of the sum.
double partition_function(const EnergySpectrum& spectrum, double eps, int n_max);

/// exp(-eps e0) / (1 - exp(-eps))
double partition_function_linear(double e0, double eps);

/// Diagonal element over the kernel; `normalized` also divides by Z(eps).
double husimi_q(const CSFamily& family, double eps, double zsq, bool normalized,
                const SeriesOptions& opts = {});

/// Omega / sqrt(kernel(|z|^2) kernel(|zp|^2)).
Complex normalized_element(const CSFamily& family, const ThermalQuery& q,
                           const SeriesOptions& opts = {});

/// Oscillator closed form exp[-(|z|^2+|zp|^2)/2 + exp(-eps) z* zp], printed
/// with and without the exp(-eps/2) zero-point prefactor.
struct OscillatorNormalizedForms {
  Complex without_zero_point;
  Complex with_zero_point;
};

OscillatorNormalizedForms oscillator_normalized_forms(double eps, Complex z, Complex zp);

/// Gamma(e0 + 1) exp(-eps e0) exp(exp(-eps) x) / x^e0, large-argument form.
double asymptotic_omega_linear(double e0, double eps, double x);
double asymptotic_omega_linear_log(double e0, double eps, double x);

/// The family kernel as a plain pFq: parameters plus the factor multiplying
/// the product variable. Absent when rho(n) is not of that shape.
struct KernelForm {
  HypergeometricParams params;
  double argument_scale = 1.0;
};

std::optional<KernelForm> kernel_form(const CSFamily& family);

}  // namespace ghcs
