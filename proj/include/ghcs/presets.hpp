#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghcs/family.hpp"
#include "ghcs/unity.hpp"

namespace ghcs {

struct PresetRecord {
  std::string name;
  Kind kind = Kind::BG;
  HypergeometricParams params;
  EnergySpectrum spectrum = EnergySpectrum::linear(0.0);

  CSFamily family() const { return CSFamily(kind, params, spectrum); }
};

/// Ordered by name so every listing is deterministic.
using PresetRegistry = std::map<std::string, PresetRecord>;

/// Free parameters of the built-in presets.
struct PresetKnobs {
  double k = 1.0;
  double e0 = 0.5;
  double b = 1.0;
};

/// ho, ho-e0, pho-bg, pho-kp, pho-gk, quadratic.
PresetRegistry builtin_presets(const PresetKnobs& knobs = {});

/// JSON document name -> {kind, p, q, a, b, spectrum: {variant, e0 | k | b}}.
/// Throws std::invalid_argument on malformed records.
PresetRegistry parse_registry(const std::string& json_text);
PresetRegistry load_registry(const std::string& path);
std::string dump_registry(const PresetRegistry& registry);

/// One message per record that fails to build a family; empty when valid.
std::vector<std::string> validate_registry(const PresetRegistry& registry);

/// Elementary radial weight whose moments are rho(n), when one is registered.
std::optional<WeightPreset> weight_for(const PresetRecord& record);

}  // namespace ghcs
