#include "ghcs/pfq.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ghcs {

namespace {

constexpr int kLogGammaThreshold = 150;

double factorial(int n) { return pochhammer(1.0, n); }

}  // namespace

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::BG:
      return "BG";
    case Kind::KP:
      return "KP";
    case Kind::GK:
      return "GK";
  }
  return "?";
}

Kind kind_from_string(const std::string& name) {
  if (name == "BG" || name == "bg") return Kind::BG;
  if (name == "KP" || name == "kp") return Kind::KP;
  if (name == "GK" || name == "gk") return Kind::GK;
  throw std::invalid_argument("unknown coherent-state kind '" + name + "'");
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

HypergeometricParams::HypergeometricParams(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  for (double v : a_) {
    if (!std::isfinite(v)) throw std::invalid_argument("numerator parameter is not finite");
  }
  for (double v : b_) {
    if (!std::isfinite(v)) throw std::invalid_argument("denominator parameter is not finite");
    if (is_nonpositive_integer(v)) {
      std::ostringstream msg;
      msg << "denominator parameter " << v << " is zero or a negative integer";
      throw std::invalid_argument(msg.str());
    }
  }
  if (p() > q() + 1) {
    throw std::invalid_argument("p > q + 1: the series has zero radius of convergence");
  }
}

HypergeometricParams HypergeometricParams::make(int p, int q, std::vector<double> a,
                                                std::vector<double> b) {
  if (p < 0 || q < 0) throw std::invalid_argument("p and q must be nonnegative");
  if (static_cast<int>(a.size()) != p || static_cast<int>(b.size()) != q) {
    throw std::invalid_argument("parameter list lengths do not match (p, q)");
  }
  return HypergeometricParams(std::move(a), std::move(b));
}

HypergeometricParams HypergeometricParams::swapped() const {
  HypergeometricParams out;
  out.a_ = b_;
  out.b_ = a_;
  return out;
}

double HypergeometricParams::upper_product(double n) const {
  double r = 1.0;
  for (double v : a_) r *= v + n;
  return r;
}

double HypergeometricParams::lower_product(double n) const {
  double r = 1.0;
  for (double v : b_) r *= v + n;
  return r;
}

double pochhammer(double x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative n");
  double r = 1.0;
  for (int m = 0; m < n; ++m) r *= x + m;
  return r;
}

SignedLog pochhammer_log(double x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_log: negative n");
  SignedLog out;
  if (is_nonpositive_integer(x) && n > -x) {
    return {-kInfinity, 0};
  }
  // Count the negative factors x + m < 0 for the sign.
  if (x < 0.0) {
    const int negatives = std::min(n, static_cast<int>(std::ceil(-x)));
    out.sign = negatives % 2 == 0 ? 1 : -1;
  }
  if (n <= kLogGammaThreshold) {
    for (int m = 0; m < n; ++m) out.log_abs += std::log(std::abs(x + m));
  } else {
    out.log_abs = std::lgamma(x + n) - std::lgamma(x);
  }
  return out;
}

SignedLog structure_constant_log(const HypergeometricParams& params, Kind kind, int n) {
  if (kind == Kind::GK) {
    throw std::invalid_argument("structure_constant: GK constants come from the spectrum");
  }
  if (n < 0) throw std::invalid_argument("structure_constant: negative n");
  SignedLog out = pochhammer_log(1.0, n);
  const auto& num = kind == Kind::BG ? params.b() : params.a();
  const auto& den = kind == Kind::BG ? params.a() : params.b();
  for (double v : num) {
    const auto t = pochhammer_log(v, n);
    out.log_abs += t.log_abs;
    out.sign *= t.sign;
  }
  for (double v : den) {
    const auto t = pochhammer_log(v, n);
    if (t.sign == 0) {
      throw std::domain_error("structure_constant: denominator Pochhammer vanishes");
    }
    out.log_abs -= t.log_abs;
    out.sign *= t.sign;
  }
  return out;
}

double structure_constant(const HypergeometricParams& params, Kind kind, int n) {
  if (kind == Kind::GK) {
    throw std::invalid_argument("structure_constant: GK constants come from the spectrum");
  }
  if (n < 0) throw std::invalid_argument("structure_constant: negative n");
  if (n > kLogGammaThreshold) {
    const auto l = structure_constant_log(params, kind, n);
    if (l.log_abs > std::log(std::numeric_limits<double>::max())) {
      throw std::overflow_error("structure_constant: rho(n) overflows, use structure_constant_log");
    }
    return l.sign * std::exp(l.log_abs);
  }
  const auto& num = kind == Kind::BG ? params.b() : params.a();
  const auto& den = kind == Kind::BG ? params.a() : params.b();
  double r = 1.0;
  for (int m = 0; m < n; ++m) {
    double step = m + 1.0;
    for (double v : num) step *= v + m;
    double div = 1.0;
    for (double v : den) div *= v + m;
    if (div == 0.0) {
      throw std::domain_error("structure_constant: denominator Pochhammer vanishes");
    }
    r *= step / div;
  }
  if (!std::isfinite(r)) {
    throw std::overflow_error("structure_constant: rho(n) overflows, use structure_constant_log");
  }
  return r;
}

double convergence_radius(const HypergeometricParams& params) {
  if (params.p() <= params.q()) return kInfinity;
  if (params.p() == params.q() + 1) return 1.0;
  return 0.0;
}

void check_radius(double radius, double abs_x, const SeriesOptions& opts, const char* what) {
  if (std::isinf(radius)) return;
  const double limit = radius * (1.0 - opts.radius_margin);
  if (!(abs_x <= limit)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": |x| = " << abs_x << " outside the admissible radius " << limit;
    throw OutOfRadius(msg.str());
  }
}

std::optional<double> closed_form(const HypergeometricParams& params, double x) {
  const auto& a = params.a();
  const auto& b = params.b();
  if (a.empty() && b.empty()) return std::exp(x);
  if (a.size() == 1 && b.empty()) {
    if (!(std::abs(x) < 1.0)) throw OutOfRadius("closed_form: 1F0 needs |x| < 1");
    return std::pow(1.0 - x, -a[0]);
  }
  if (a.size() == 1 && b.size() == 1 && a[0] == 1.0) {
    if (b[0] == 1.5) {
      if (x < 0.0) return std::nullopt;
      if (x == 0.0) return 1.0;
      const double s = std::sqrt(x);
      return std::sqrt(std::numbers::pi) / (2.0 * s) * std::exp(x) * std::erf(s);
    }
    if (b[0] == 2.0) {
      if (x == 0.0) return 1.0;
      return std::expm1(x) / x;
    }
  }
  return std::nullopt;
}

double ode_residual_coefficients(const HypergeometricParams& params, int N) {
  if (N < 1) throw std::invalid_argument("ode_residual_coefficients: N must be >= 1");
  // c_n = prod (a)_n / (n! prod (b)_n), built from Pochhammer products so the
  // check does not reuse the summation recurrence.
  auto coefficient = [&](int n) {
    double c = 1.0 / factorial(n);
    for (double v : params.a()) c *= pochhammer(v, n);
    for (double v : params.b()) c /= pochhammer(v, n);
    return c;
  };
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double lhs = coefficient(n + 1) * (n + 1.0) * params.lower_product(n);
    const double rhs = coefficient(n) * params.upper_product(n);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

double asymptotic_1f1_log(double a, double b, double x) {
  if (!(x > 0.0)) throw std::domain_error("asymptotic_1f1: x must be positive");
  return std::lgamma(b) - std::lgamma(a) + x + (a - b) * std::log(x);
}

double asymptotic_1f1(double a, double b, double x) {
  return std::exp(asymptotic_1f1_log(a, b, x));
}

}  // namespace ghcs
