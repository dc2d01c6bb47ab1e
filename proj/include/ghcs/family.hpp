#pragma once

#include <Eigen/Core>
#include <cmath>
#include <utility>

#include "ghcs/pfq.hpp"
#include "ghcs/report.hpp"
#include "ghcs/spectrum.hpp"

namespace ghcs {

/// Gazeau-Klauder label, z = sqrt(J) exp(-i gamma).
struct GKLabel {
  double J = 0.0;
  double gamma = 0.0;

  static GKLabel from_complex(Complex z) { return {std::norm(z), -std::arg(z)}; }
  Complex to_complex() const { return std::polar(std::sqrt(J), -gamma); }
};

/// A coherent-state family: kind, parameters and Hamiltonian spectrum.
///
/// rho(n) comes from the parameters for BG (n! (b)_n/(a)_n) and KP
/// (n! (a)_n/(b)_n), and from prod_{m<=n} e(m) of the spectrum for GK.
/// The spectrum always supplies the thermal energies.
class CSFamily {
 public:
  CSFamily(Kind kind, HypergeometricParams params, EnergySpectrum spectrum);

  Kind kind() const { return kind_; }
  const HypergeometricParams& params() const { return params_; }
  const EnergySpectrum& spectrum() const { return spectrum_; }

  double rho(int n) const;
  SignedLog log_rho(int n) const;

  /// rho(m) / rho(m - 1), the eigenvalue seen by the ladder operators.
  double structure_energy(int m) const;
  /// rho(m - 1) / rho(m); zero where the series terminates.
  double inverse_structure_energy(int m) const;

  /// Radius of the overlap kernel in the product variable.
  double radius() const { return radius_; }

 private:
  Kind kind_;
  HypergeometricParams params_;
  EnergySpectrum spectrum_;
  double radius_;
};

/// Product variable of a matrix element plus the GK phase offset.
///
/// BG/KP: u = conj(z) zp. GK: u = |z||zp| and term n picks up
/// exp(i (gamma - gamma') e(n)).
struct KernelArgument {
  Complex u{0.0, 0.0};
  double phase_shift = 0.0;
};

KernelArgument kernel_argument(const CSFamily& family, Complex z, Complex zp);

/// sum_n weight(n) u^n phase_n / rho(n), with the library stopping rule.
/// `effective_abs` is what gets compared with the family radius.
template <typename Weight>
EvalResult<Complex> family_series(const CSFamily& family, const KernelArgument& arg,
                                  Weight&& weight, double effective_abs,
                                  const SeriesOptions& opts = {}) {
  check_radius(family.radius(), effective_abs, opts, "family_series");
  Complex base{1.0, 0.0};
  const bool phased = arg.phase_shift != 0.0;
  auto next = [&](int n) -> std::pair<Complex, bool> {
    if (n > 0) base *= arg.u * family.inverse_structure_energy(n);
    const bool terminal = n > 0 && base == Complex{0.0, 0.0};
    Complex term = base * weight(n);
    if (phased && n > 0) {
      term *= std::polar(1.0, arg.phase_shift * energy_eigenvalue(family.spectrum(), n));
    }
    return {term, terminal};
  };
  auto out = sum_series<Complex>(next, opts);
  out.radius = family.radius();
  if (!out.converged) {
    throw NotConverged("family_series: no convergence after " + std::to_string(out.terms_used) +
                       " terms");
  }
  return out;
}

/// Fock-space coefficients of a non-normalized coherent state.
struct FockExpansion {
  Eigen::VectorXcd coefficients;

  Eigen::Index order() const { return coefficients.size() - 1; }
};

/// z^n / sqrt(rho(n)); GK families read z as sqrt(J) exp(-i gamma).
Complex cs_coefficient(const CSFamily& family, int n, Complex z);
/// (sqrt J)^n exp(-i gamma e(n)) / sqrt(rho(n)), for GK families.
Complex cs_coefficient(const CSFamily& family, int n, const GKLabel& label);

FockExpansion fock_expansion(const CSFamily& family, Complex z, int N);
/// Starts at N = 64 and doubles until |c_N|^2 <= 1e-30 of the running norm.
FockExpansion fock_expansion(const CSFamily& family, Complex z);

/// A_-|n> = sqrt(e(n)) |n-1>. Output has one entry fewer than the input.
FockExpansion ladder_down(const CSFamily& family, const FockExpansion& in);
/// A_+|n> = sqrt(e(n+1)) |n+1>, truncated to the input order.
FockExpansion ladder_up(const CSFamily& family, const FockExpansion& in);

/// sum_n z^n (A_+)^n |0> / rho(n), built by repeated raising.
FockExpansion build_state_by_ladder(const CSFamily& family, Complex z, int N);

/// ((z|z')) = sum (z* z')^n / rho(n).
Complex overlap(const CSFamily& family, Complex z, Complex zp, const SeriesOptions& opts = {});
EvalResult<Complex> overlap_series(const CSFamily& family, Complex z, Complex zp,
                                   const SeriesOptions& opts = {});

/// <z|H|z>/hbar omega = sum_{n>=1} e(n) zsq^n / rho(n) / kernel(zsq). BG only.
double action_identity(const CSFamily& family, double zsq, const SeriesOptions& opts = {});

/// max_n |rho_BG(n) rho_KP(n) / (n!)^2 - 1|.
VerificationReport duality_check(const HypergeometricParams& params, int n_max,
                                 double tolerance = 1e-12);

}  // namespace ghcs
