#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "optomech/model.hpp"
#include "optomech/sweep.hpp"

namespace optomech {

/// A parsed configuration document.
///
/// Layout (every field optional; defaults are reference_parameters()):
///
///   {
///     "units": "si" | "normalized",
///     "cavity": {"length", "wavelength", "finesse", "delta_c"},
///     "mirror": {"mass", "omega_m", "quality", "temperature", "xi"},
///     "bec":    {"present", "zeta", "omega_sw", "omega_R", "gamma_c", "temperature",
///                "thermal_noise", "microscopic": {...}},
///     "drive":  {"power"},
///     "sweep":  {"variable", "lo", "hi", "points", "mode", "bec", "variants": [...]}
///   }
///
/// In normalized units delta_c and gamma_c are multiples of kappa, omega_sw and
/// omega_R multiples of omega_m. omega_m, zeta, xi and all microscopic inputs are
/// always absolute SI. Each sweep variant is a partial document merge-patched
/// onto the base document, plus a "label".
struct Config {
    AxisUnits units = AxisUnits::si;
    SystemParams params;
    std::optional<SweepSpec> sweep;
};

/// Throws ConfigError naming the offending field.
Config parse_config(const nlohmann::json& doc);
Config load_config(const std::filesystem::path& path);

nlohmann::json to_json(const SystemParams& p);
nlohmann::json to_json(const DerivedQuantities& d);
nlohmann::json to_json(const SweepSpec& s);

}  // namespace optomech
