#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghcs/errors.hpp"

namespace ghcs {

using Complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Stopping controls shared by every series summation in the library.
struct SeriesOptions {
  int max_terms = 10000;
  double rel_tol = 1e-15;
  int consecutive_small = 2;
  /// Finite radii R are shrunk to R * (1 - radius_margin).
  double radius_margin = 1e-6;
};

/// Which way the structure constants are built from (a; b).
enum class Kind { BG, KP, GK };

std::string to_string(Kind kind);
Kind kind_from_string(const std::string& name);

/// Numerator and denominator parameters of pFq.
///
/// Construction rejects denominators in {0, -1, -2, ...} and p > q + 1.
class HypergeometricParams {
 public:
  HypergeometricParams() = default;
  HypergeometricParams(std::vector<double> a, std::vector<double> b);

  /// Checks the declared (p, q) against the list lengths.
  static HypergeometricParams make(int p, int q, std::vector<double> a, std::vector<double> b);

  int p() const { return static_cast<int>(a_.size()); }
  int q() const { return static_cast<int>(b_.size()); }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }

  /// Parameters of the dual function qFp(b; a; x).
  HypergeometricParams swapped() const;

  /// A_p(n + 1) = prod (a_i + n)
  double upper_product(double n) const;
  /// B_q(n + 1) = prod (b_j + n)
  double lower_product(double n) const;

  bool operator==(const HypergeometricParams&) const = default;

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

bool is_nonpositive_integer(double x);

/// (x)_n = x (x + 1) ... (x + n - 1), (x)_0 = 1.
double pochhammer(double x, int n);

/// log |(x)_n| and the sign of (x)_n. Sign is 0 when the product vanishes.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};

/// Uses a running log-sum up to n = 150 and log-gamma beyond.
SignedLog pochhammer_log(double x, int n);

/// rho(n) for BG (n! prod (b)_n / prod (a)_n) or KP (the reciprocal ratio).
/// Throws std::overflow_error when the value leaves the double range.
double structure_constant(const HypergeometricParams& params, Kind kind, int n);
SignedLog structure_constant_log(const HypergeometricParams& params, Kind kind, int n);

/// Infinity for p <= q, 1 for p = q + 1.
double convergence_radius(const HypergeometricParams& params);

template <typename Scalar>
struct EvalResult {
  Scalar value{};
  int terms_used = 0;
  double last_term_magnitude = 0.0;
  bool converged = false;
  double radius = kInfinity;
};

/// Throws OutOfRadius unless |x| <= radius * (1 - margin).
void check_radius(double radius, double abs_x, const SeriesOptions& opts, const char* what);

/// Sequential summation with the library stopping rule.
///
/// `next(n)` returns term n and whether every later term is identically zero.
/// A term counts as small when |term| <= rel_tol * |partial sum|; the sum stops
/// after `consecutive_small` small terms in a row or at a terminal term.
template <typename Scalar, typename Next>
EvalResult<Scalar> sum_series(Next&& next, const SeriesOptions& opts) {
  EvalResult<Scalar> out;
  Scalar sum{};
  int small = 0;
  for (int n = 0; n < opts.max_terms; ++n) {
    const auto [term, terminal] = next(n);
    sum += term;
    out.terms_used = n + 1;
    out.last_term_magnitude = std::abs(term);
    if (terminal) {
      out.converged = true;
      break;
    }
    const double mag = std::abs(sum);
    if (mag > 0.0 && out.last_term_magnitude <= opts.rel_tol * mag) {
      if (++small >= opts.consecutive_small) {
        out.converged = true;
        break;
      }
    } else {
      small = 0;
    }
  }
  out.value = sum;
  return out;
}

/// pFq(a; b; x) by the term recurrence
/// t_{n+1} = t_n x prod(a_i + n) / ((n + 1) prod(b_j + n)).
template <typename Scalar>
EvalResult<Scalar> eval_pfq(const HypergeometricParams& params, Scalar x,
                            const SeriesOptions& opts = {}) {
  const double radius = convergence_radius(params);
  check_radius(radius, std::abs(x), opts, "eval_pfq");
  Scalar term{1.0};
  auto next = [&](int n) -> std::pair<Scalar, bool> {
    if (n > 0) {
      const double m = n - 1;
      term *= x * (params.upper_product(m) / ((m + 1.0) * params.lower_product(m)));
    }
    return {term, term == Scalar{0.0}};
  };
  auto out = sum_series<Scalar>(next, opts);
  out.radius = radius;
  if (!out.converged) {
    throw NotConverged("eval_pfq: no convergence after " + std::to_string(out.terms_used) +
                       " terms");
  }
  return out;
}

/// Elementary closed forms: 0F0, 1F0(b;;x), 1F1(1;3/2;x) (x >= 0, erf form),
/// 1F1(1;2;x). Absent when nothing matches.
std::optional<double> closed_form(const HypergeometricParams& params, double x);

/// max_n |c_{n+1}(n+1)B(n) - c_n A(n)| / |c_n A(n)| over n <= N with c_n = 1/rho_BG(n),
/// the coefficient form of [B(x d/dx) - x A(x d/dx)] F = 0.
double ode_residual_coefficients(const HypergeometricParams& params, int N);

/// Gamma(b)/Gamma(a) e^x x^(a-b), the leading large-x behaviour of 1F1(a;b;x).
double asymptotic_1f1(double a, double b, double x);
double asymptotic_1f1_log(double a, double b, double x);

}  // namespace ghcs
