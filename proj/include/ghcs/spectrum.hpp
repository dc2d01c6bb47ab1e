#pragma once

#include <string>
#include <variant>

#include "ghcs/pfq.hpp"

namespace ghcs {

/// e(n) = n + e0
struct LinearSpectrum {
  double e0 = 0.0;
};

/// e(m) = m B_q(m) / A_p(m)
struct BGRationalSpectrum {
  HypergeometricParams params;
};

/// e(m) = m A_p(m) / B_q(m)
struct KPRationalSpectrum {
  HypergeometricParams params;
};

/// e(n) = n (n + b)
struct QuadraticSpectrum {
  double b = 1.0;
};

/// e(m) = scale (m + k). Thermal energies are measured in units of
/// scale * hbar*omega_0, so they read n + k.
struct GKScaledSpectrum {
  double k = 1.0;
  double scale = 2.0;
};

/// Dimensionless eigenvalue rule (units of hbar*omega).
class EnergySpectrum {
 public:
  using Variant = std::variant<LinearSpectrum, BGRationalSpectrum, KPRationalSpectrum,
                               QuadraticSpectrum, GKScaledSpectrum>;

  EnergySpectrum(Variant v);

  static EnergySpectrum linear(double e0) { return EnergySpectrum(LinearSpectrum{e0}); }
  static EnergySpectrum bg_rational(HypergeometricParams p) {
    return EnergySpectrum(BGRationalSpectrum{std::move(p)});
  }
  static EnergySpectrum kp_rational(HypergeometricParams p) {
    return EnergySpectrum(KPRationalSpectrum{std::move(p)});
  }
  static EnergySpectrum quadratic(double b) { return EnergySpectrum(QuadraticSpectrum{b}); }
  static EnergySpectrum gk_scaled(double k, double scale = 2.0) {
    return EnergySpectrum(GKScaledSpectrum{k, scale});
  }

  const Variant& variant() const { return v_; }
  std::string name() const;

 private:
  Variant v_;
};

/// e(m), m >= 1.
double energy_eigenvalue(const EnergySpectrum& spectrum, int m);

/// Energy entering exp(-eps E(n)) for n >= 0. The n = 0 value follows each
/// variant's convention: e0 (linear), 0 (quadratic, rational), k (GK).
double thermal_energy(const EnergySpectrum& spectrum, int n);

/// lim E(n)/n: 0, 1 or infinity. Bounds the effective thermal argument.
double thermal_growth(const EnergySpectrum& spectrum);

}  // namespace ghcs
