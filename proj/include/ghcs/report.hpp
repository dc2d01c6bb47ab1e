#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace ghcs {

struct CheckEntry {
  std::string label;
  double value = 0.0;
  double expected = 0.0;
  double error = 0.0;
  bool passed = true;
};

/// Per-point discrepancies with pass/fail against one tolerance.
struct VerificationReport {
  std::string name;
  double tolerance = 0.0;
  std::vector<CheckEntry> entries;

  void add(std::string label, double value, double expected, double error) {
    entries.push_back({std::move(label), value, expected, error, error <= tolerance});
  }

  double max_error() const {
    double worst = 0.0;
    for (const auto& e : entries) worst = std::max(worst, e.error);
    return worst;
  }

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
  }
};

}  // namespace ghcs
