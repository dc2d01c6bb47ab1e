#include "ghcs/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ghcs/suites.hpp"

namespace ghcs {

namespace {

struct PresetOptions {
  std::string registry_path;
  PresetKnobs knobs;
};

void add_preset_options(CLI::App* cmd, PresetOptions& o) {
  cmd->add_option("--presets", o.registry_path, "JSON preset registry (default: built-ins)");
  cmd->add_option("--k", o.knobs.k, "Bargmann index of the pho-* presets");
  cmd->add_option("--e0", o.knobs.e0, "ground-state offset of ho-e0");
  cmd->add_option("--b", o.knobs.b, "parameter of the quadratic preset");
}

PresetRegistry load_presets(const PresetOptions& o) {
  if (o.registry_path.empty()) return builtin_presets(o.knobs);
  return load_registry(o.registry_path);
}

const PresetRecord& find_preset(const PresetRegistry& registry, const std::string& name) {
  const auto it = registry.find(name);
  if (it == registry.end()) throw std::invalid_argument("unknown preset '" + name + "'");
  return it->second;
}

std::string fixed(double v, int digits) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, r.ptr);
}

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

SeriesOptions series_options_from_env() {
  SeriesOptions opts;
  if (const char* env = std::getenv("GHCS_NMAX")) {
    int n = 0;
    const std::string text(env);
    const auto r = std::from_chars(text.data(), text.data() + text.size(), n);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size() || n < 1) {
      throw std::invalid_argument("GHCS_NMAX must be a positive integer, got '" + text + "'");
    }
    opts.max_terms = n;
  }
  return opts;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << text;
}

/// Minimal line plot: frame, axes labels, one polyline.
std::string svg_plot(const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  constexpr double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;
  const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
       "viewBox=\"0 0 640 400\">\n";
  s << "<title>" << title << "</title>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  s << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  s << "<line x1=\"" << fixed(L, 1) << "\" y1=\"" << fixed(H - B, 1) << "\" x2=\""
    << fixed(W - R, 1) << "\" y2=\"" << fixed(H - B, 1) << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << fixed(L, 1) << "\" y1=\"" << fixed(T, 1) << "\" x2=\"" << fixed(L, 1)
    << "\" y2=\"" << fixed(H - B, 1) << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << fixed(L, 1) << "\" y=\"" << fixed(H - B + 16, 1)
    << "\" font-size=\"11\">" << format_number(xmin) << "</text>\n";
  s << "<text x=\"" << fixed(W - R, 1) << "\" y=\"" << fixed(H - B + 16, 1)
    << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(xmax) << "</text>\n";
  s << "<text x=\"" << fixed(L - 4, 1) << "\" y=\"" << fixed(H - B, 1)
    << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymin) << "</text>\n";
  s << "<text x=\"" << fixed(L - 4, 1) << "\" y=\"" << fixed(T + 4, 1)
    << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymax) << "</text>\n";
  s << "<text x=\"320\" y=\"" << fixed(H - 12, 1) << "\" text-anchor=\"middle\" font-size=\"12\">"
    << x_label << "</text>\n";
  s << "<text x=\"16\" y=\"200\" font-size=\"12\" transform=\"rotate(-90 16 200)\" "
       "text-anchor=\"middle\">"
    << y_label << "</text>\n";
  s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s << ' ';
    s << fixed(px(xs[i]), 3) << ',' << fixed(py(ys[i]), 3);
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::optional<int> p, q;
  std::vector<double> a, b;
  std::string preset;
  PresetOptions presets;
  double x = 0.0;
  double xi = 0.0;
};

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  HypergeometricParams params;
  if (!args.preset.empty()) {
    const auto registry = load_presets(args.presets);
    const auto form = kernel_form(find_preset(registry, args.preset).family());
    if (!form) throw std::invalid_argument("preset has no pFq kernel");
    params = form->params;
  } else {
    params = HypergeometricParams::make(args.p.value_or(static_cast<int>(args.a.size())),
                                        args.q.value_or(static_cast<int>(args.b.size())), args.a,
                                        args.b);
  }
  const auto opts = series_options_from_env();
  if (args.xi == 0.0) {
    const auto r = eval_pfq(params, args.x, opts);
    out << "value=" << format_number(r.value) << " terms_used=" << r.terms_used
        << " converged=" << (r.converged ? "true" : "false") << "\n";
  } else {
    const auto r = eval_pfq(params, Complex{args.x, args.xi}, opts);
    out << "value_re=" << format_number(r.value.real())
        << " value_im=" << format_number(r.value.imag()) << " terms_used=" << r.terms_used
        << " converged=" << (r.converged ? "true" : "false") << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------- omega

const char* kOmegaHeader = "preset,eps,re_z,im_z,re_zp,im_zp,value_re,value_im,terms_used,route\n";

std::string omega_row(const std::string& preset, double eps, Complex z, Complex zp,
                      const OmegaResult& r) {
  return join({preset, format_number(eps), format_number(z.real()), format_number(z.imag()),
               format_number(zp.real()), format_number(zp.imag()), format_number(r.value.real()),
               format_number(r.value.imag()), std::to_string(r.terms_used), to_string(r.route)});
}

struct OmegaArgs {
  std::string preset;
  PresetOptions presets;
  double eps = 0.0;
  std::optional<double> zz;
  double z_re = 0.0, z_im = 0.0, zp_re = 0.0, zp_im = 0.0;
  std::string route = "definition-series";
  bool no_header = false;
};

OmegaResult evaluate_omega(const CSFamily& family, const ThermalQuery& q, const std::string& route,
                           const SeriesOptions& opts) {
  if (route == "definition-series") return omega_element(family, q, opts);
  const auto closed = omega_closed_form(family, q);
  if (closed) return *closed;
  if (route == "closed-form") throw std::invalid_argument("no closed form for this query");
  return omega_element(family, q, opts);
}

int cmd_omega(const OmegaArgs& args, std::ostream& out) {
  const auto registry = load_presets(args.presets);
  const auto family = find_preset(registry, args.preset).family();
  Complex z{args.z_re, args.z_im};
  Complex zp{args.zp_re, args.zp_im};
  if (args.zz) {
    const double root = std::sqrt(std::abs(*args.zz));
    z = {root, 0.0};
    zp = {*args.zz < 0.0 ? -root : root, 0.0};
  }
  const ThermalQuery q{args.eps, z, zp};
  const auto r = evaluate_omega(family, q, args.route, series_options_from_env());
  if (!args.no_header) out << kOmegaHeader;
  out << omega_row(args.preset, args.eps, z, zp, r);
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::vector<std::string> preset_filter;
  PresetOptions presets;
  std::string out_dir;
  double bloch_tol = 1e-6;
  double moment_tol = 1e-8;
  int nodes = 200;
};

struct VerifyOutput {
  std::string bloch_csv = "preset,eps,x,lhs,rhs,abs,rel,pass\n";
  std::string moments_csv = "preset,n,quadrature_value,target,rel_error\n";
  std::string summary;
  int checks = 0;
  int failures = 0;
  double worst_bloch = 0.0;

  void line(bool pass, const std::string& name, double worst, double tol) {
    ++checks;
    if (!pass) ++failures;
    summary += std::string(pass ? "PASS " : "FAIL ") + name + " worst=" + format_number(worst) +
               " tol=" + shortest(tol) + "\n";
  }
  void info(const std::string& label, double value) {
    summary += "INFO " + label + " = " + format_number(value) + " (informational)\n";
  }
};

void verify_bloch(const PresetRecord& record, const VerifyArgs& args, VerifyOutput& o) {
  const auto rows = bloch_suite(record, 1e-4, args.bloch_tol);
  bool pass = true;
  double worst = 0.0;
  for (const auto& r : rows) {
    pass = pass && r.passed;
    worst = std::max(worst, r.at_step.rel_residual);
    o.bloch_csv += join({r.preset, format_number(r.eps), format_number(r.x),
                         format_number(r.at_step.lhs.real()), format_number(r.at_step.rhs.real()),
                         format_number(r.at_step.abs_residual),
                         format_number(r.at_step.rel_residual), r.passed ? "true" : "false"});
  }
  o.worst_bloch = std::max(o.worst_bloch, worst);
  o.line(pass, "bloch[" + record.name + "]", worst, args.bloch_tol);
}

void verify_moments(const PresetRecord& record, const VerifyArgs& args, VerifyOutput& o) {
  const auto suite = moment_suite(record, 10, args.nodes, args.moment_tol);
  if (!suite) {
    o.summary += "SKIP moments[" + record.name + "] no elementary weight registered\n";
    return;
  }
  for (std::size_t n = 0; n < suite->report.entries.size(); ++n) {
    const auto& e = suite->report.entries[n];
    o.moments_csv += join({record.name, std::to_string(n), format_number(e.value),
                           format_number(e.expected), format_number(e.error)});
  }
  o.line(suite->report.passed(), "moments[" + record.name + "]", suite->report.max_error(),
         args.moment_tol);
  std::string ladder;
  for (const auto& s : suite->convergence.steps) {
    ladder += " " + std::to_string(s.node_count) + ":" + format_number(s.worst_error);
  }
  o.line(suite->convergence.monotone, "moment-convergence[" + record.name + "]",
         suite->convergence.steps.back().worst_error, args.moment_tol);
  o.summary += "     nodes:worst" + ladder + "\n";
}

void verify_identities(const IdentitySuite& suite, VerifyOutput& o) {
  for (const auto& r : suite.reports) o.line(r.passed(), r.name, r.max_error(), r.tolerance);
  for (const auto& i : suite.info) o.info(i.label, i.value);
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.suite != "bloch" && args.suite != "moments" && args.suite != "identities" &&
      args.suite != "all") {
    throw std::invalid_argument("unknown suite '" + args.suite + "'");
  }
  const auto registry = load_presets(args.presets);
  std::vector<std::string> names = args.preset_filter;
  if (names.empty()) {
    if (args.presets.registry_path.empty()) {
      names = verification_presets();
    } else {
      for (const auto& [name, r] : registry) names.push_back(name);
    }
  }
  std::vector<const PresetRecord*> records;
  for (const auto& n : names) records.push_back(&find_preset(registry, n));

  VerifyOutput o;
  const bool all = args.suite == "all";
  if (all || args.suite == "bloch") {
    for (const auto* r : records) verify_bloch(*r, args, o);
  }
  if (all || args.suite == "moments") {
    for (const auto* r : records) verify_moments(*r, args, o);
  }
  if (all || args.suite == "identities") {
    if (args.preset_filter.empty()) verify_identities(library_identity_suite(), o);
    for (const auto* r : records) verify_identities(identity_suite(*r), o);
  }
  const bool pass = o.failures == 0;
  o.summary += std::string("summary: ") + (pass ? "PASS" : "FAIL") + " " +
               std::to_string(o.checks - o.failures) + "/" + std::to_string(o.checks) +
               " checks\n";

  if (!args.out_dir.empty()) {
    std::filesystem::create_directories(args.out_dir);
    const std::filesystem::path dir(args.out_dir);
    std::vector<std::string> written;
    if (all || args.suite == "bloch") {
      write_output((dir / "bloch.csv").string(), o.bloch_csv, out);
      written.push_back((dir / "bloch.csv").string());
    }
    if (all || args.suite == "moments") {
      write_output((dir / "moments.csv").string(), o.moments_csv, out);
      written.push_back((dir / "moments.csv").string());
    }
    write_output((dir / "summary.txt").string(), o.summary, out);
    written.push_back((dir / "summary.txt").string());
    for (const auto& w : written) o.summary += "wrote " + w + "\n";
  }
  out << o.summary;
  return pass ? kExitPass : kExitToleranceFailure;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string quantity;
  std::string preset;
  PresetOptions presets;
  std::string eps = "0";
  std::string zsq = "1";
  std::string format = "csv";
  std::string file;
  bool normalized = false;
};

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  const auto registry = load_presets(args.presets);
  const auto& record = find_preset(registry, args.preset);
  const auto family = record.family();
  const auto eps_grid = parse_grid(args.eps);
  const bool uses_zsq = args.quantity != "partition";
  const auto zsq_grid = uses_zsq ? parse_grid(args.zsq) : std::vector<double>{0.0};
  for (double e : eps_grid) {
    if (!(e >= 0.0)) throw std::invalid_argument("eps grid must be >= 0");
    if (args.quantity == "partition" && !(e > 0.0)) {
      throw std::invalid_argument("partition scan needs eps > 0");
    }
  }
  for (double s : zsq_grid) {
    if (!(s >= 0.0)) throw std::invalid_argument("zsq grid must be >= 0");
    if (uses_zsq && !(s <= family.radius() * (1.0 - SeriesOptions{}.radius_margin))) {
      throw std::invalid_argument("zsq grid leaves the disc of convergence");
    }
  }
  const auto opts = series_options_from_env();

  std::string csv;
  std::vector<double> xs, ys;
  const bool vary_zsq = zsq_grid.size() > 1;
  if (args.format == "svg" && vary_zsq && eps_grid.size() > 1) {
    throw std::invalid_argument("svg output needs a one-dimensional scan");
  }
  if (args.quantity == "omega") {
    csv = kOmegaHeader;
  } else if (args.quantity == "husimi") {
    csv = "preset,eps,zsq,value\n";
  } else if (args.quantity == "partition") {
    csv = "preset,eps,value\n";
  } else {
    throw std::invalid_argument("unknown scan quantity '" + args.quantity + "'");
  }
  for (double eps : eps_grid) {
    for (double zsq : zsq_grid) {
      double y = 0.0;
      if (args.quantity == "omega") {
        const Complex z{std::sqrt(zsq), 0.0};
        const auto r = omega_element(family, {eps, z, z}, opts);
        csv += omega_row(record.name, eps, z, z, r);
        y = r.value.real();
      } else if (args.quantity == "husimi") {
        y = husimi_q(family, eps, zsq, args.normalized, opts);
        csv += join({record.name, format_number(eps), format_number(zsq), format_number(y)});
      } else {
        y = partition_function(record.spectrum, eps, opts.max_terms);
        csv += join({record.name, format_number(eps), format_number(y)});
      }
      xs.push_back(vary_zsq ? zsq : eps);
      ys.push_back(y);
    }
  }
  if (args.format == "csv") {
    write_output(args.file, csv, out);
  } else if (args.format == "svg") {
    write_output(args.file,
                 svg_plot(args.quantity + " " + record.name, vary_zsq ? "|z|^2" : "eps",
                          args.quantity, xs, ys),
                 out);
  } else {
    throw std::invalid_argument("--out must be csv or svg");
  }
  return kExitPass;
}

// ---------------------------------------------------------------- presets

struct PresetsArgs {
  std::string action = "list";
  PresetOptions presets;
};

int cmd_presets(const PresetsArgs& args, std::ostream& out, std::ostream& err) {
  const auto registry = load_presets(args.presets);
  if (args.action == "list") {
    for (const auto& [name, r] : registry) {
      out << name << " " << to_string(r.kind) << " p=" << r.params.p() << " q=" << r.params.q()
          << " spectrum=" << r.spectrum.name() << "\n";
    }
    return kExitPass;
  }
  if (args.action == "validate") {
    const auto problems = validate_registry(registry);
    for (const auto& p : problems) err << "invalid preset " << p << "\n";
    if (!problems.empty()) return kExitInvalidInput;
    out << "ok " << registry.size() << " presets\n";
    return kExitPass;
  }
  if (args.action == "dump") {
    out << dump_registry(registry);
    return kExitPass;
  }
  throw std::invalid_argument("presets action must be list, validate or dump");
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const OutOfRadius& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const QuadratureUnderResolved& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::logic_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed grid '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) return {number(view)};
  const auto colon = view.find(':', dots);
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("grid '" + text + "' needs start..stop:step");
  }
  const double start = number(view.substr(0, dots));
  const double stop = number(view.substr(dots + 2, colon - dots - 2));
  const double step = number(view.substr(colon + 1));
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  if (stop < start) throw std::invalid_argument("empty grid '" + text + "'");
  const double steps = std::floor((stop - start) / step + 0.5);
  if (steps > 1e6) throw std::invalid_argument("grid too large");
  std::vector<double> out;
  for (long i = 0; i <= static_cast<long>(steps); ++i) out.push_back(start + i * step);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal coherent-state matrix elements and their verification", "ghcs"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate pFq(a; b; x)");
  eval->add_option("--p", eval_args.p, "number of numerator parameters");
  eval->add_option("--q", eval_args.q, "number of denominator parameters");
  eval->add_option("--a", eval_args.a, "numerator parameters")->delimiter(',');
  eval->add_option("--b", eval_args.b, "denominator parameters")->delimiter(',');
  eval->add_option("--preset", eval_args.preset, "use the kernel of a preset");
  eval->add_option("--presets", eval_args.presets.registry_path, "JSON preset registry");
  eval->add_option("--x", eval_args.x, "argument (real part)")->required();
  eval->add_option("--xi", eval_args.xi, "argument (imaginary part)");

  OmegaArgs omega_args;
  auto* omega = app.add_subcommand("omega", "thermal matrix element");
  omega->add_option("--preset", omega_args.preset)->required();
  add_preset_options(omega, omega_args.presets);
  omega->add_option("--eps", omega_args.eps, "dimensionless inverse temperature")->required();
  auto* zz = omega->add_option("--zz", omega_args.zz, "sets z = zp = sqrt(X)");
  omega->add_option("--z-re", omega_args.z_re)->excludes(zz);
  omega->add_option("--z-im", omega_args.z_im)->excludes(zz);
  omega->add_option("--zp-re", omega_args.zp_re)->excludes(zz);
  omega->add_option("--zp-im", omega_args.zp_im)->excludes(zz);
  omega->add_option("--route", omega_args.route)
      ->check(CLI::IsMember({"definition-series", "closed-form", "auto"}));
  omega->add_flag("--no-header", omega_args.no_header);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", verify_args.suite, "bloch, moments, identities or all");
  verify->add_option("--preset", verify_args.preset_filter, "restrict to these presets")
      ->delimiter(',');
  add_preset_options(verify, verify_args.presets);
  verify->add_option("--out-dir", verify_args.out_dir, "write CSV reports here");
  verify->add_option("--bloch-tol", verify_args.bloch_tol);
  verify->add_option("--moment-tol", verify_args.moment_tol);
  verify->add_option("--nodes", verify_args.nodes);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "tabulate a quantity over a grid");
  scan->add_option("quantity", scan_args.quantity, "omega, husimi or partition")->required();
  scan->add_option("--preset", scan_args.preset)->required();
  add_preset_options(scan, scan_args.presets);
  scan->add_option("--eps", scan_args.eps, "grid start..stop:step or a value");
  scan->add_option("--zsq", scan_args.zsq, "grid start..stop:step or a value");
  scan->add_option("--out", scan_args.format, "csv or svg");
  scan->add_option("--file", scan_args.file, "output path (default stdout)");
  scan->add_flag("--normalized", scan_args.normalized, "divide Husimi values by Z");

  PresetsArgs presets_args;
  auto* presets = app.add_subcommand("presets", "list, validate or dump presets");
  presets->add_option("action", presets_args.action, "list, validate or dump");
  add_preset_options(presets, presets_args.presets);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  if (eval->parsed()) return guarded([&] { return cmd_eval(eval_args, out); }, err);
  if (omega->parsed()) return guarded([&] { return cmd_omega(omega_args, out); }, err);
  if (verify->parsed()) return guarded([&] { return cmd_verify(verify_args, out); }, err);
  if (scan->parsed()) return guarded([&] { return cmd_scan(scan_args, out); }, err);
  if (presets->parsed()) {
    return guarded([&] { return cmd_presets(presets_args, out, err); }, err);
  }
  return kExitInvalidInput;
}

}  // namespace ghcs
