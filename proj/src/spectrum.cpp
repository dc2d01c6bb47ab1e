#include "ghcs/spectrum.hpp"

#include <stdexcept>

namespace ghcs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_params(const HypergeometricParams& p) {
  for (double v : p.a()) {
    if (!(v > 0.0)) throw std::invalid_argument("rational spectrum needs positive a_i");
  }
  for (double v : p.b()) {
    if (!(v > 0.0)) throw std::invalid_argument("rational spectrum needs positive b_j");
  }
}

}  // namespace

EnergySpectrum::EnergySpectrum(Variant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const LinearSpectrum& s) {
                   if (!(s.e0 >= 0.0)) throw std::invalid_argument("linear spectrum: e0 < 0");
                 },
                 [](const BGRationalSpectrum& s) { require_positive_params(s.params); },
                 [](const KPRationalSpectrum& s) { require_positive_params(s.params); },
                 [](const QuadraticSpectrum& s) {
                   if (s.b == 0.0) throw std::invalid_argument("quadratic spectrum: b == 0");
                   if (!(s.b > -1.0)) {
                     throw std::invalid_argument("quadratic spectrum: e(1) = 1 + b must be > 0");
                   }
                 },
                 [](const GKScaledSpectrum& s) {
                   if (!(s.k > 0.0)) throw std::invalid_argument("GK spectrum: k <= 0");
                   if (!(s.scale > 0.0)) throw std::invalid_argument("GK spectrum: scale <= 0");
                 },
             },
             v_);
}

std::string EnergySpectrum::name() const {
  return std::visit(overloaded{
                        [](const LinearSpectrum&) { return std::string("linear"); },
                        [](const BGRationalSpectrum&) { return std::string("bg-rational"); },
                        [](const KPRationalSpectrum&) { return std::string("kp-rational"); },
                        [](const QuadraticSpectrum&) { return std::string("quadratic"); },
                        [](const GKScaledSpectrum&) { return std::string("gk"); },
                    },
                    v_);
}

double energy_eigenvalue(const EnergySpectrum& spectrum, int m) {
  if (m < 1) throw std::invalid_argument("energy_eigenvalue: m must be >= 1");
  const double x = m;
  return std::visit(
      overloaded{
          [&](const LinearSpectrum& s) { return x + s.e0; },
          [&](const BGRationalSpectrum& s) {
            return x * s.params.lower_product(x - 1.0) / s.params.upper_product(x - 1.0);
          },
          [&](const KPRationalSpectrum& s) {
            return x * s.params.upper_product(x - 1.0) / s.params.lower_product(x - 1.0);
          },
          [&](const QuadraticSpectrum& s) { return x * (x + s.b); },
          [&](const GKScaledSpectrum& s) { return s.scale * (x + s.k); },
      },
      spectrum.variant());
}

double thermal_energy(const EnergySpectrum& spectrum, int n) {
  if (n < 0) throw std::invalid_argument("thermal_energy: n must be >= 0");
  const double x = n;
  return std::visit(overloaded{
                        [&](const LinearSpectrum& s) { return x + s.e0; },
                        [&](const BGRationalSpectrum&) {
                          return n == 0 ? 0.0 : energy_eigenvalue(spectrum, n);
                        },
                        [&](const KPRationalSpectrum&) {
                          return n == 0 ? 0.0 : energy_eigenvalue(spectrum, n);
                        },
                        [&](const QuadraticSpectrum& s) { return x * (x + s.b); },
                        [&](const GKScaledSpectrum& s) { return x + s.k; },
                    },
                    spectrum.variant());
}

double thermal_growth(const EnergySpectrum& spectrum) {
  auto rational = [](int degree) {
    if (degree > 1) return kInfinity;
    return degree == 1 ? 1.0 : 0.0;
  };
  return std::visit(overloaded{
                        [](const LinearSpectrum&) { return 1.0; },
                        [&](const BGRationalSpectrum& s) {
                          return rational(1 + s.params.q() - s.params.p());
                        },
                        [&](const KPRationalSpectrum& s) {
                          return rational(1 + s.params.p() - s.params.q());
                        },
                        [](const QuadraticSpectrum&) { return kInfinity; },
                        [](const GKScaledSpectrum&) { return 1.0; },
                    },
                    spectrum.variant());
}

}  // namespace ghcs
