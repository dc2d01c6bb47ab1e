#include "ghcs/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghcs {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

std::string fmt_label(const std::string& prefix, double a, const std::string& mid = "",
                      double b = 0.0) {
  std::ostringstream s;
  s.precision(6);
  s << prefix << a;
  if (!mid.empty()) s << mid << b;
  return s.str();
}

double rel_diff(Complex a, Complex b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

bool is_oscillator(const PresetRecord& r) {
  const auto* lin = std::get_if<LinearSpectrum>(&r.spectrum.variant());
  return r.kind == Kind::BG && r.params.p() == 0 && r.params.q() == 0 && lin && lin->e0 == 0.0;
}

/// e0 when the family kernel is 1F1(1; e0 + 1) (or 0F0 at e0 = 0) with E(n) = n + e0.
std::optional<double> confluent_linear_offset(const PresetRecord& r) {
  const auto* lin = std::get_if<LinearSpectrum>(&r.spectrum.variant());
  if (!lin || r.kind != Kind::BG) return std::nullopt;
  if (is_oscillator(r)) return 0.0;
  const auto& p = r.params;
  if (p.p() == 1 && p.q() == 1 && p.a()[0] == 1.0 && p.b()[0] == lin->e0 + 1.0) return lin->e0;
  return std::nullopt;
}

Complex sqrt_label(double x) { return x >= 0.0 ? Complex{std::sqrt(x), 0.0} : Complex{0.0, 0.0}; }

}  // namespace

std::vector<std::string> verification_presets() {
  return {"ho", "ho-e0", "pho-bg", "pho-kp", "pho-gk", "quadratic"};
}

std::vector<double> bloch_eps_grid() { return {0.1, 0.5, 1.0}; }

std::vector<double> bloch_x_grid(const CSFamily& family) {
  return {0.1, 0.5, std::min(1.0, 0.9 * family.radius())};
}

std::vector<BlochRow> bloch_suite(const PresetRecord& record, double fd_step, double tolerance,
                                  double floor) {
  const auto family = record.family();
  std::vector<BlochRow> rows;
  for (double eps : bloch_eps_grid()) {
    for (double x : bloch_x_grid(family)) {
      const ThermalQuery q{eps, sqrt_label(x), sqrt_label(x)};
      BlochRow row;
      row.preset = record.name;
      row.eps = eps;
      row.x = x;
      row.at_step = bloch_residual(family, q, fd_step);
      row.at_half_step = bloch_residual(family, q, fd_step / 2.0);
      const double r1 = row.at_step.rel_residual;
      const double r2 = row.at_half_step.rel_residual;
      row.passed = r1 <= tolerance && (r2 <= floor || r1 >= 3.0 * r2);
      rows.push_back(row);
    }
  }
  return rows;
}

std::optional<MomentSuite> moment_suite(const PresetRecord& record, int n_max, int node_count,
                                        double tolerance) {
  const auto weight = weight_for(record);
  if (!weight) return std::nullopt;
  const auto quad = weight->matched_quadrature(node_count);
  return MomentSuite{record.name, *weight, moment_check(*weight, n_max, quad, tolerance),
                     moment_convergence(*weight, n_max, quad)};
}

bool IdentitySuite::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed(); });
}

IdentitySuite identity_suite(const PresetRecord& record) {
  IdentitySuite out;
  const auto family = record.family();
  const std::string tag = "[" + record.name + "]";
  const auto x_grid = bloch_x_grid(family);

  {
    auto r = duality_check(record.params, 20);
    r.name = "duality" + tag;
    out.reports.push_back(std::move(r));
  }

  if (const auto form = kernel_form(family)) {
    VerificationReport r;
    r.name = "ode-coefficients" + tag;
    r.tolerance = 1e-14;
    r.add("n<=50", ode_residual_coefficients(form->params, 50), 0.0,
          ode_residual_coefficients(form->params, 50));
    out.reports.push_back(std::move(r));
  }

  {
    VerificationReport r;
    r.name = "boundary" + tag;
    r.tolerance = 1e-13;
    std::vector<std::pair<Complex, Complex>> labels;
    for (double x : x_grid) labels.emplace_back(sqrt_label(x), sqrt_label(x));
    const double s = std::sqrt(0.5 * x_grid.back());
    labels.emplace_back(Complex{0.6 * s, 0.5 * s}, Complex{0.7 * s, -0.4 * s});
    labels.emplace_back(Complex{0.0, 0.0}, Complex{0.3, 0.1});
    for (const auto& [z, zp] : labels) {
      const Complex omega = omega_element(family, {0.0, z, zp}).value;
      const Complex kernel = omega_boundary(family, z, zp);
      r.add(fmt_label("z*zp=", std::abs(std::conj(z) * zp)), std::abs(omega), std::abs(kernel),
            std::abs(omega - kernel));
    }
    out.reports.push_back(std::move(r));
  }

  {
    VerificationReport r;
    r.name = "hermiticity" + tag;
    r.tolerance = 1e-14;
    const double s = std::sqrt(0.5 * x_grid.back());
    const Complex z{0.6 * s, 0.5 * s};
    const Complex zp{0.7 * s, -0.4 * s};
    for (double eps : {0.0, 0.5, 1.0}) {
      const Complex a = omega_element(family, {eps, z, zp}).value;
      const Complex b = std::conj(omega_element(family, {eps, zp, z}).value);
      r.add(fmt_label("eps=", eps), std::abs(a), std::abs(b), rel_diff(a, b));
    }
    out.reports.push_back(std::move(r));
  }

  {
    VerificationReport r;
    r.name = "monotone-cooling" + tag;
    r.tolerance = 0.0;
    const std::vector<double> eps_grid{0.0, 0.25, 0.5, 1.0, 2.0};
    for (double x : x_grid) {
      double prev = kInfinity;
      bool ok = true;
      for (double eps : eps_grid) {
        const double v = omega_element(family, {eps, sqrt_label(x), sqrt_label(x)}).value.real();
        ok = ok && v < prev;
        prev = v;
      }
      r.add(fmt_label("x=", x), ok ? 1.0 : 0.0, 1.0, ok ? 0.0 : 1.0);
    }
    out.reports.push_back(std::move(r));
  }

  if (record.kind == Kind::BG) {
    VerificationReport r;
    r.name = "action-identity" + tag;
    r.tolerance = 1e-10;
    const double top = std::min(5.0, 0.9 * family.radius());
    for (int i = 0; i <= 10; ++i) {
      const double zsq = top * i / 10.0;
      const double a = action_identity(family, zsq);
      r.add(fmt_label("zsq=", zsq), a, zsq, std::abs(a - zsq) / std::max(zsq, 1e-300));
    }
    out.reports.push_back(std::move(r));
  }

  if (kernel_form(family)) {
    VerificationReport r;
    r.name = "argument-rescaling" + tag;
    r.tolerance = 1e-13;
    for (double eps : bloch_eps_grid()) {
      for (double x : x_grid) {
        const ThermalQuery q{eps, sqrt_label(x), sqrt_label(x)};
        const auto rescaled = omega_rescaled(family, q);
        if (!rescaled) continue;
        const Complex direct = omega_element(family, q).value;
        r.add(fmt_label("eps=", eps, " x=", x), std::abs(direct), std::abs(rescaled->value),
              rel_diff(direct, rescaled->value));
      }
    }
    if (!r.entries.empty()) out.reports.push_back(std::move(r));
  }

  {
    VerificationReport r;
    r.name = "partition-function" + tag;
    const auto& spectrum = record.spectrum;
    if (thermal_growth(spectrum) == 1.0 && (std::holds_alternative<LinearSpectrum>(spectrum.variant()) ||
                                            std::holds_alternative<GKScaledSpectrum>(spectrum.variant()))) {
      r.tolerance = 1e-12;
      for (double eps : {kLn2, 1.0}) {
        const double sum = partition_function(spectrum, eps, SeriesOptions{}.max_terms);
        const double closed = partition_function_linear(thermal_energy(spectrum, 0), eps);
        r.add(fmt_label("eps=", eps), sum, closed, std::abs(sum / closed - 1.0));
      }
    } else {
      r.tolerance = 1e-15;
      for (double eps : {0.5, 1.0}) {
        const double coarse = partition_function(spectrum, eps, 40);
        const double fine = partition_function(spectrum, eps, 80);
        r.add(fmt_label("eps=", eps), coarse, fine, std::abs(coarse / fine - 1.0));
      }
    }
    out.reports.push_back(std::move(r));
  }

  if (is_oscillator(record)) {
    std::vector<Complex> xs;
    for (double x : x_grid) xs.emplace_back(x, 0.0);
    xs.emplace_back(0.3, 0.4);
    auto closed = closed_form_solution_check({0.0, 0.1, 0.5, 1.0}, xs, 1e-12);
    closed.name = "oscillator-closed-form" + tag;
    out.reports.push_back(std::move(closed));

    VerificationReport husimi;
    husimi.name = "husimi-closed-form" + tag;
    husimi.tolerance = 1e-12;
    for (double eps : {kLn2, 1.0}) {
      for (int i = 0; i <= 8; ++i) {
        const double zsq = 0.5 * i;
        const double q = husimi_q(family, eps, zsq, false);
        const double exact = std::exp(std::expm1(-eps) * zsq);
        husimi.add(fmt_label("eps=", eps, " zsq=", zsq), q, exact, std::abs(q - exact));
      }
    }
    out.reports.push_back(std::move(husimi));

    const Complex z{1.0, 0.0};
    const auto forms = oscillator_normalized_forms(kLn2, z, z);
    out.info.push_back({"normalized element eps=ln2 |z|^2=1" + tag,
                        normalized_element(family, {kLn2, z, z}).real()});
    out.info.push_back({"closed form without exp(-eps/2)" + tag, forms.without_zero_point.real()});
    out.info.push_back({"closed form with exp(-eps/2)" + tag, forms.with_zero_point.real()});
  }

  if (const auto e0 = confluent_linear_offset(record)) {
    const auto audit = audit_rescaling_identity(*e0, kLn2, 1.0);
    const auto scalar = audit_rescaling_identity(*e0, kLn2, 1.0, AuditRoute::ScalarProduct);
    VerificationReport routes;
    routes.name = "audit-route-agreement" + tag;
    routes.tolerance = 1e-13;
    routes.add("eps=ln2 x=1", audit.abs_diff, scalar.abs_diff,
               std::abs(audit.abs_diff - scalar.abs_diff));
    out.reports.push_back(std::move(routes));

    VerificationReport at_zero;
    at_zero.name = "audit-at-eps-zero" + tag;
    at_zero.tolerance = 1e-13;
    for (double x : {0.5, 1.0, 2.0}) {
      at_zero.add(fmt_label("x=", x), audit_rescaling_identity(*e0, 0.0, x).abs_diff, 0.0,
                  audit_rescaling_identity(*e0, 0.0, x).abs_diff);
    }
    out.reports.push_back(std::move(at_zero));

    if (audit.exact_expected) {
      VerificationReport exact;
      exact.name = "audit-exact" + tag;
      exact.tolerance = 1e-12;
      exact.add("eps=ln2 x=1", audit.lhs, audit.rhs, audit.abs_diff);
      out.reports.push_back(std::move(exact));
    } else {
      out.info.push_back({"rescaling identity audit abs_diff eps=ln2 x=1" + tag, audit.abs_diff});
    }

    if (*e0 > 0.0) {
      VerificationReport asym;
      asym.name = "asymptotic-omega" + tag;
      asym.tolerance = 0.03;
      const HypergeometricParams params({1.0}, {*e0 + 1.0});
      const double series = std::log(eval_pfq(params, 30.0).value);
      const double approx = asymptotic_omega_linear_log(*e0, 0.0, 30.0);
      asym.add("eps=0 x=30", approx, series, std::abs(std::expm1(approx - series)));
      out.reports.push_back(std::move(asym));
      for (double eps : {0.5, 1.0}) {
        const double s = -eps * *e0 + std::log(eval_pfq(params, std::exp(-eps) * 30.0).value);
        const double a = asymptotic_omega_linear_log(*e0, eps, 30.0);
        out.info.push_back({fmt_label("asymptotic omega log gap eps=", eps, " x=", 30.0) + tag,
                            a - s});
      }
    }
  }
  return out;
}

IdentitySuite library_identity_suite() {
  IdentitySuite out;
  const HypergeometricParams erf_params({1.0}, {1.5});

  VerificationReport erf;
  erf.name = "erf-closed-form";
  erf.tolerance = 1e-10;
  for (double x : {0.25, 1.0, 4.0}) {
    const double series = eval_pfq(erf_params, x).value;
    const double closed = *closed_form(erf_params, x);
    erf.add(fmt_label("x=", x), series, closed, std::abs(series / closed - 1.0));
  }
  out.reports.push_back(std::move(erf));

  VerificationReport asym;
  asym.name = "asymptotic-1f1";
  asym.tolerance = 0.02;
  const double series = std::log(eval_pfq(erf_params, 30.0).value);
  const double approx = asymptotic_1f1_log(1.0, 1.5, 30.0);
  asym.add("x=30", approx, series, std::abs(std::expm1(approx - series)));
  out.reports.push_back(std::move(asym));
  return out;
}

}  // namespace ghcs
