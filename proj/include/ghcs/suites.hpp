#pragma once

#include <string>
#include <vector>

#include "ghcs/bloch.hpp"
#include "ghcs/presets.hpp"
#include "ghcs/unity.hpp"

namespace ghcs {

/// Presets covered by the verification grids, in report order.
std::vector<std::string> verification_presets();

/// The x grid {0.1, 0.5, min(1, 0.9 R)}.
std::vector<double> bloch_x_grid(const CSFamily& family);
std::vector<double> bloch_eps_grid();

struct BlochRow {
  std::string preset;
  double eps = 0.0;
  double x = 0.0;
  BlochResidual at_step;
  BlochResidual at_half_step;
  bool passed = false;
};

/// rel <= tol at fd_step, and >= 3x smaller at fd_step / 2 unless already
/// under the rounding floor.
std::vector<BlochRow> bloch_suite(const PresetRecord& record, double fd_step = 1e-4,
                                  double tolerance = 1e-6, double floor = 1e-10);

struct MomentSuite {
  std::string preset;
  WeightPreset weight;
  VerificationReport report;
  MomentConvergence convergence;
  bool passed() const { return report.passed() && convergence.monotone; }
};

/// Absent when the preset has no registered elementary weight.
std::optional<MomentSuite> moment_suite(const PresetRecord& record, int n_max = 10,
                                        int node_count = 200, double tolerance = 1e-8);

/// A reported quantity that is not a pass/fail criterion.
struct InfoLine {
  std::string label;
  double value = 0.0;
};

struct IdentitySuite {
  std::vector<VerificationReport> reports;
  std::vector<InfoLine> info;
  bool passed() const;
};

/// Algebraic and closed-form identities that apply to the preset.
IdentitySuite identity_suite(const PresetRecord& record);

/// Checks not tied to any preset: the erf closed form and the 1F1 asymptote.
IdentitySuite library_identity_suite();

}  // namespace ghcs
