#include "ghcs/presets.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ghcs {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PresetRecord make_record(std::string name, Kind kind, HypergeometricParams params,
                         EnergySpectrum spectrum) {
  return {std::move(name), kind, std::move(params), std::move(spectrum)};
}

EnergySpectrum spectrum_from_json(const json& j, const HypergeometricParams& params) {
  const auto variant = j.at("variant").get<std::string>();
  if (variant == "linear") return EnergySpectrum::linear(j.value("e0", 0.0));
  if (variant == "quadratic") return EnergySpectrum::quadratic(j.at("b").get<double>());
  if (variant == "gk") return EnergySpectrum::gk_scaled(j.at("k").get<double>(), j.value("scale", 2.0));
  if (variant == "bg-rational") return EnergySpectrum::bg_rational(params);
  if (variant == "kp-rational") return EnergySpectrum::kp_rational(params);
  throw std::invalid_argument("unknown spectrum variant '" + variant + "'");
}

json spectrum_to_json(const EnergySpectrum& spectrum) {
  return std::visit(overloaded{
                        [](const LinearSpectrum& s) { return json{{"variant", "linear"}, {"e0", s.e0}}; },
                        [](const BGRationalSpectrum&) { return json{{"variant", "bg-rational"}}; },
                        [](const KPRationalSpectrum&) { return json{{"variant", "kp-rational"}}; },
                        [](const QuadraticSpectrum& s) { return json{{"variant", "quadratic"}, {"b", s.b}}; },
                        [](const GKScaledSpectrum& s) {
                          return json{{"variant", "gk"}, {"k", s.k}, {"scale", s.scale}};
                        },
                    },
                    spectrum.variant());
}

PresetRecord record_from_json(const std::string& name, const json& j) {
  const Kind kind = kind_from_string(j.at("kind").get<std::string>());
  auto a = j.value("a", std::vector<double>{});
  auto b = j.value("b", std::vector<double>{});
  const int p = j.value("p", static_cast<int>(a.size()));
  const int q = j.value("q", static_cast<int>(b.size()));
  auto params = HypergeometricParams::make(p, q, std::move(a), std::move(b));
  auto spectrum = spectrum_from_json(j.at("spectrum"), params);
  return make_record(name, kind, std::move(params), std::move(spectrum));
}

}  // namespace

PresetRegistry builtin_presets(const PresetKnobs& knobs) {
  const double k = knobs.k;
  PresetRegistry out;
  auto add = [&](PresetRecord r) { out.emplace(r.name, std::move(r)); };
  add(make_record("ho", Kind::BG, HypergeometricParams({}, {}), EnergySpectrum::linear(0.0)));
  add(make_record("ho-e0", Kind::BG, HypergeometricParams({1.0}, {knobs.e0 + 1.0}),
                  EnergySpectrum::linear(knobs.e0)));
  add(make_record("pho-bg", Kind::BG, HypergeometricParams({1.0}, {k + 1.0}),
                  EnergySpectrum::linear(k)));
  add(make_record("pho-kp", Kind::KP, HypergeometricParams({}, {2.0 * k}),
                  EnergySpectrum::linear(2.0 * k)));
  add(make_record("pho-gk", Kind::GK, HypergeometricParams({1.0}, {k + 1.0}),
                  EnergySpectrum::gk_scaled(k)));
  add(make_record("quadratic", Kind::BG, HypergeometricParams({}, {knobs.b + 1.0}),
                  EnergySpectrum::quadratic(knobs.b)));
  return out;
}

PresetRegistry parse_registry(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("preset registry: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("preset registry must be a JSON object");
  PresetRegistry out;
  for (const auto& [name, value] : doc.items()) {
    try {
      out.emplace(name, record_from_json(name, value));
    } catch (const json::exception& e) {
      throw std::invalid_argument("preset '" + name + "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("preset '" + name + "': " + e.what());
    }
  }
  return out;
}

PresetRegistry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open preset file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_registry(text.str());
}

std::string dump_registry(const PresetRegistry& registry) {
  json doc = json::object();
  for (const auto& [name, r] : registry) {
    doc[name] = json{{"kind", to_string(r.kind)},
                     {"p", r.params.p()},
                     {"q", r.params.q()},
                     {"a", r.params.a()},
                     {"b", r.params.b()},
                     {"spectrum", spectrum_to_json(r.spectrum)}};
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> validate_registry(const PresetRegistry& registry) {
  std::vector<std::string> problems;
  for (const auto& [name, r] : registry) {
    try {
      const auto family = r.family();
      // Past the largest |parameter| every Pochhammer factor keeps its sign.
      double reach = 0.0;
      for (double v : family.params().a()) reach = std::max(reach, std::abs(v));
      for (double v : family.params().b()) reach = std::max(reach, std::abs(v));
      const int last = 2 + static_cast<int>(std::ceil(std::min(reach, 1e4)));
      for (int m = 1; m <= last; ++m) {
        if (!(family.inverse_structure_energy(m) > 0.0)) {
          throw std::invalid_argument("structure energy at m=" + std::to_string(m) + " is not positive");
        }
      }
    } catch (const std::exception& e) {
      problems.push_back(name + ": " + e.what());
    }
  }
  return problems;
}

std::optional<WeightPreset> weight_for(const PresetRecord& record) {
  const auto& p = record.params;
  if (record.kind == Kind::BG && p.p() == 0 && p.q() == 0) return WeightPreset::ho();
  if (record.kind == Kind::BG && p.p() == 1 && p.q() == 1 && p.a()[0] == 1.0 && p.b()[0] > 0.0) {
    return WeightPreset::bg_pho(p.b()[0] - 1.0);
  }
  if (record.kind == Kind::KP && p.p() == 0 && p.q() == 1 && p.b()[0] > 1.0) {
    return WeightPreset::kp_pho(p.b()[0] / 2.0);
  }
  return std::nullopt;
}

}  // namespace ghcs
