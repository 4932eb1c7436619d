#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lspom/sensing.hpp"

namespace lspom {

using Json = nlohmann::ordered_json;

/// Range for the coupling-spectrum command, in units of omega / omega_p.
struct SpectrumGrid {
    double lo = 0.01;
    double hi = 0.50;
    int points = 2000;
};

/// Sweep request as configured (axis values already converted to SI).
struct SweepRequest {
    SweepAxis axis = SweepAxis::r_m;
    std::vector<double> values;
};

/// Fully validated run configuration with every quantity in SI.
struct RunConfig {
    std::string preset_name = "custom";
    Scenario scenario;
    double quantum_yield = 0.0;  // parsed, carried as inert metadata
    bool frequencies_are_ordinary = false;
    SpectrumGrid spectrum_grid;
    std::optional<double> force_fwhm;       // rad/s; overrides the extracted FWHM
    std::optional<double> casimir_gap;      // m; default distance - radius
    std::optional<double> paper_mass_resolution; // kg
    std::optional<double> paper_casimir;         // N
    std::optional<SweepRequest> sweep;
    std::vector<std::string> warnings;      // non-fatal validation notes

    /// Provenance + conventions block embedded in every output sidecar.
    Json metadata() const;
};

/// Names of the bundled presets.
std::vector<std::string> preset_names();

/// Raw JSON text of a bundled preset. Throws ConfigError for unknown names.
Json preset_json(const std::string& name);

/// Parse and validate a config document. A preset (from the document's
/// "preset" key or the explicit argument) supplies defaults; explicit keys
/// override it. Unknown keys anywhere are errors.
RunConfig load_config(const Json& document, const std::string& preset = "");

/// Convenience: read a JSON file, then load_config.
RunConfig load_config_file(const std::string& path, const std::string& preset = "");

/// Config from a preset alone.
RunConfig load_preset(const std::string& name);

} // namespace lspom
