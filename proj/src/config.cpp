#include "lspom/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "lspom/constants.hpp"
#include "lspom/errors.hpp"

namespace lspom {

namespace {

enum class UnitKind { frequency, length, intensity, mass, raman_sq };

struct UnitContext {
    bool frequencies_are_ordinary = false;
};

double unit_scale(UnitKind kind, const std::string& units, const UnitContext& ctx,
                  const std::string& path) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double freq_factor = ctx.frequencies_are_ordinary ? two_pi : 1.0;
    static const std::map<std::string, double> freq{
        {"PHz", 1e15}, {"THz", 1e12}, {"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}};
    static const std::map<std::string, double> length{
        {"m", 1.0}, {"um", 1e-6}, {"nm", 1e-9}, {"A", 1e-10}};
    static const std::map<std::string, double> intensity{
        {"W/m^2", 1.0}, {"kW/cm^2", 1e7}, {"W/cm^2", 1e4}, {"mW/cm^2", 10.0}};
    static const std::map<std::string, double> mass{{"kg", 1.0}, {"amu", amu}};

    switch (kind) {
        case UnitKind::frequency:
            if (units == "rad/s") return 1.0;  // never rescaled by the flag
            if (auto it = freq.find(units); it != freq.end()) return it->second * freq_factor;
            break;
        case UnitKind::length:
            if (auto it = length.find(units); it != length.end()) return it->second;
            break;
        case UnitKind::intensity:
            if (auto it = intensity.find(units); it != intensity.end()) return it->second;
            break;
        case UnitKind::mass:
            if (auto it = mass.find(units); it != mass.end()) return it->second;
            break;
        case UnitKind::raman_sq:
            if (units == "m^4/kg") return 1.0;
            if (units == "A^4/amu") return std::pow(angstrom, 4) / amu;
            break;
    }
    throw ConfigError(path + ": unsupported units \"" + units + "\"");
}

// Object wrapper that rejects unknown keys.
class Strict {
public:
    Strict(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
    }
    ~Strict() = default;

    bool has(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key);
    }
    const Json& at(const std::string& key) {
        seen_.insert(key);
        if (!j_.contains(key)) throw ConfigError(path_ + "." + key + ": missing required key");
        return j_.at(key);
    }
    const Json* get(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }
    std::string sub(const std::string& key) const { return path_ + "." + key; }
    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) {
                throw ConfigError(path_ + "." + it.key() + ": unknown key");
            }
        }
    }

private:
    const Json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

double number_at(const Json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

// Quantity = {"value": <number>, "units": <string>}.
double parse_quantity(const Json& j, const std::string& path, UnitKind kind,
                      const UnitContext& ctx) {
    Strict q(j, path);
    const double value = number_at(q.at("value"), q.sub("value"));
    const Json& u = q.at("units");
    if (!u.is_string()) throw ConfigError(q.sub("units") + ": expected a string");
    q.finish();
    return value * unit_scale(kind, u.get<std::string>(), ctx, q.sub("units"));
}

DrudeModel parse_drude(const Json& j, const std::string& path, const UnitContext& ctx) {
    Strict d(j, path);
    DrudeModel m;
    m.eps_inf = number_at(d.at("eps_inf"), d.sub("eps_inf"));
    m.omega_p = parse_quantity(d.at("omega_p"), d.sub("omega_p"), UnitKind::frequency, ctx);
    m.gamma_p = parse_quantity(d.at("gamma_p"), d.sub("gamma_p"), UnitKind::frequency, ctx);
    d.finish();
    if (m.eps_inf < 1.0) {
        throw ConfigError(path + ".eps_inf: bulk materials require eps_inf >= 1");
    }
    if (!(m.omega_p > 0.0)) throw ConfigError(path + ".omega_p: must be positive");
    if (m.gamma_p < 0.0) throw ConfigError(path + ".gamma_p: must be >= 0");
    return m;
}

SweepAxis parse_axis(const std::string& name, const std::string& path) {
    if (name == "AR_inf") return SweepAxis::ar_inf;
    if (name == "r_m") return SweepAxis::r_m;
    if (name == "n") return SweepAxis::mode_n;
    if (name == "pump_intensity") return SweepAxis::pump_intensity;
    if (name == "R") return SweepAxis::radius;
    throw ConfigError(path + ": unknown sweep axis \"" + name + "\"");
}

// Deep merge: overlay wins; objects merge recursively.
Json merge(const Json& base, const Json& overlay) {
    if (!base.is_object() || !overlay.is_object()) return overlay;
    Json out = base;
    for (auto it = overlay.begin(); it != overlay.end(); ++it) {
        if (out.contains(it.key())) {
            out[it.key()] = merge(out[it.key()], it.value());
        } else {
            out[it.key()] = it.value();
        }
    }
    return out;
}

const char* kBasePreset = R"JSON({
  "material": {
    "radial": {
      "eps_inf": 6.0,
      "omega_p": {"value": 1.9, "units": "PHz"},
      "gamma_p": {"value": 0.012, "units": "PHz"}
    },
    "ar_inf": 1.0
  },
  "geometry": {
    "radius": {"value": 10, "units": "nm"},
    "distance": {"value": 14, "units": "nm"}
  },
  "mechanical": {
    "omega_m": {"value": 470, "units": "GHz"},
    "gamma": {"value": 1.9, "units": "GHz"},
    "mass": {"value": 3e-22, "units": "kg"},
    "raman_element_sq": {"value": 1000, "units": "A^4/amu"},
    "quantum_yield": 0.01
  },
  "drive": {
    "pump_intensity": {"value": 400, "units": "kW/cm^2"},
    "probe_intensity": {"value": 1, "units": "kW/cm^2"},
    "enhancement": 10.0
  },
  "probe_grid": {
    "halfwidth": {"value": 47.5, "units": "GHz"},
    "points": 2001
  },
  "spectrum_grid": {"lo": 0.01, "hi": 0.5, "points": 2000},
  "mode": 1,
  "n_max": 4,
  "units": {"frequencies_are_ordinary": false}
})JSON";

Json build_preset(double ar_inf, bool caption_omega_p) {
    Json j = Json::parse(kBasePreset);
    j["material"]["ar_inf"] = ar_inf;
    if (caption_omega_p) j["material"]["radial"]["omega_p"]["value"] = 0.19;
    return j;
}

const std::map<std::string, Json>& preset_table() {
    // The two omega_p variants are intentionally separate named presets: the
    // source data quotes both 1.9 PHz and 0.19 PHz and neither may be chosen
    // silently.
    static const std::map<std::string, Json> table = [] {
        std::map<std::string, Json> t;
        t["silver-iso"] = build_preset(1.0, false);
        t["aniso-AR0.1"] = build_preset(0.1, false);
        t["aniso-AR0.01"] = build_preset(0.01, false);
        t["aniso-AR0.002"] = build_preset(0.002, false);
        t["silver-iso-caption"] = build_preset(1.0, true);
        t["aniso-AR0.1-caption"] = build_preset(0.1, true);
        t["aniso-AR0.01-caption"] = build_preset(0.01, true);
        t["aniso-AR0.002-caption"] = build_preset(0.002, true);
        return t;
    }();
    return table;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : preset_table()) names.push_back(name);
    return names;
}

Json preset_json(const std::string& name) {
    const auto& t = preset_table();
    auto it = t.find(name);
    if (it == t.end()) {
        std::string known;
        for (const auto& [n, _] : t) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset \"" + name + "\" (known: " + known + ")");
    }
    return it->second;
}

RunConfig load_config(const Json& document, const std::string& preset) {
    if (!document.is_object()) throw ConfigError("config: expected a JSON object");

    std::string preset_name = preset;
    if (document.contains("preset")) {
        const Json& p = document.at("preset");
        if (!p.is_string()) throw ConfigError("config.preset: expected a string");
        if (!preset.empty() && preset != p.get<std::string>()) {
            throw ConfigError("config.preset conflicts with the preset given on the "
                              "command line");
        }
        preset_name = p.get<std::string>();
    }

    Json doc = document;
    doc.erase("preset");
    if (!preset_name.empty()) doc = merge(preset_json(preset_name), doc);

    RunConfig cfg;
    cfg.preset_name = preset_name.empty() ? "custom" : preset_name;

    Strict root(doc, "config");

    // units policy first: it scales every other frequency quantity
    UnitContext ctx;
    if (const Json* u = root.get("units")) {
        Strict units(*u, root.sub("units"));
        if (const Json* f = units.get("frequencies_are_ordinary")) {
            if (!f->is_boolean()) {
                throw ConfigError("config.units.frequencies_are_ordinary: expected a bool");
            }
            ctx.frequencies_are_ordinary = f->get<bool>();
        }
        units.finish();
    }
    cfg.frequencies_are_ordinary = ctx.frequencies_are_ordinary;

    {
        Strict m(root.at("material"), root.sub("material"));
        const DrudeModel radial = parse_drude(m.at("radial"), m.sub("radial"), ctx);
        if (m.has("tangential") && m.has("ar_inf")) {
            throw ConfigError("config.material: give either ar_inf or tangential, not both");
        }
        if (const Json* t = m.get("tangential")) {
            cfg.scenario.material = AnisotropicMaterial::from_components(
                radial, parse_drude(*t, m.sub("tangential"), ctx));
            if (!cfg.scenario.material.constraint_mode()) {
                cfg.warnings.push_back(
                    "material violates the constant-anisotropy constraint; "
                    "effective Drude parameters are unavailable");
            }
        } else if (const Json* a = m.get("ar_inf")) {
            cfg.scenario.material = AnisotropicMaterial::from_radial_and_ar(
                radial, number_at(*a, m.sub("ar_inf")));
        } else {
            throw ConfigError("config.material: needs ar_inf or tangential");
        }
        m.finish();
    }

    {
        Strict g(root.at("geometry"), root.sub("geometry"));
        const double radius =
            parse_quantity(g.at("radius"), g.sub("radius"), UnitKind::length, ctx);
        const double distance =
            parse_quantity(g.at("distance"), g.sub("distance"), UnitKind::length, ctx);
        g.finish();
        cfg.scenario.geometry = Geometry::make(radius, distance);
        if (cfg.scenario.geometry.nonlocal_warning()) {
            cfg.warnings.push_back("distance below 11 nm: nonlocal response neglected");
        }
    }

    {
        Strict m(root.at("mechanical"), root.sub("mechanical"));
        const double omega_m =
            parse_quantity(m.at("omega_m"), m.sub("omega_m"), UnitKind::frequency, ctx);
        const double gamma =
            parse_quantity(m.at("gamma"), m.sub("gamma"), UnitKind::frequency, ctx);
        const double mass = parse_quantity(m.at("mass"), m.sub("mass"), UnitKind::mass, ctx);
        const double raman_sq = parse_quantity(m.at("raman_element_sq"),
                                               m.sub("raman_element_sq"),
                                               UnitKind::raman_sq, ctx);
        if (const Json* q = m.get("quantum_yield")) {
            cfg.quantum_yield = number_at(*q, m.sub("quantum_yield"));
        }
        m.finish();
        cfg.scenario.mech = MechanicalMode::make(omega_m, gamma, mass,
                                                 raman_si_from_volume_sq(raman_sq));
    }

    {
        Strict d(root.at("drive"), root.sub("drive"));
        DriveConfig& drive = cfg.scenario.drive;
        if (const Json* v = d.get("pump_intensity")) {
            drive.pump_intensity =
                parse_quantity(*v, d.sub("pump_intensity"), UnitKind::intensity, ctx);
        }
        if (const Json* v = d.get("probe_intensity")) {
            drive.probe_intensity =
                parse_quantity(*v, d.sub("probe_intensity"), UnitKind::intensity, ctx);
        }
        if (const Json* v = d.get("omega_pu_override")) {
            drive.omega_pu_override =
                parse_quantity(*v, d.sub("omega_pu_override"), UnitKind::frequency, ctx);
        }
        if (const Json* v = d.get("omega_pr_override")) {
            drive.omega_pr_override =
                parse_quantity(*v, d.sub("omega_pr_override"), UnitKind::frequency, ctx);
        }
        if (const Json* v = d.get("enhancement")) {
            drive.enhancement = number_at(*v, d.sub("enhancement"));
        }
        if (const Json* v = d.get("pump_detuning")) {
            drive.pump_detuning =
                parse_quantity(*v, d.sub("pump_detuning"), UnitKind::frequency, ctx);
        }
        if (const Json* v = d.get("omega_pump")) {
            drive.omega_pump =
                parse_quantity(*v, d.sub("omega_pump"), UnitKind::frequency, ctx);
        }
        d.finish();
        if (drive.pump_detuning && drive.omega_pump) {
            throw ConfigError("config.drive: give pump_detuning or omega_pump, not both");
        }
        if (!drive.pump_intensity && !drive.omega_pu_override) {
            throw ConfigError("config.drive: needs pump_intensity or omega_pu_override");
        }
        if (!drive.probe_intensity && !drive.omega_pr_override) {
            throw ConfigError("config.drive: needs probe_intensity or omega_pr_override");
        }
        if (drive.pump_intensity && drive.probe_intensity && *drive.pump_intensity > 0.0) {
            // Omega scales as sqrt(I): the perturbative treatment wants
            // Omega_pr / Omega_pu < 0.1
            if (std::sqrt(*drive.probe_intensity / *drive.pump_intensity) >= 0.1) {
                cfg.warnings.push_back("probe is not much weaker than the pump "
                                       "(Omega_pr/Omega_pu >= 0.1)");
            }
        }
    }

    {
        Strict g(root.at("probe_grid"), root.sub("probe_grid"));
        cfg.scenario.window_halfwidth =
            parse_quantity(g.at("halfwidth"), g.sub("halfwidth"), UnitKind::frequency, ctx);
        if (const Json* c = g.get("center")) {
            cfg.scenario.window_center =
                parse_quantity(*c, g.sub("center"), UnitKind::frequency, ctx);
        }
        const double pts = number_at(g.at("points"), g.sub("points"));
        g.finish();
        cfg.scenario.grid_points = static_cast<int>(pts);
        if (cfg.scenario.grid_points < 16 || pts != cfg.scenario.grid_points) {
            throw ConfigError("config.probe_grid.points: expected an integer >= 16");
        }
    }

    if (const Json* s = root.get("spectrum_grid")) {
        Strict g(*s, root.sub("spectrum_grid"));
        cfg.spectrum_grid.lo = number_at(g.at("lo"), g.sub("lo"));
        cfg.spectrum_grid.hi = number_at(g.at("hi"), g.sub("hi"));
        const double pts = number_at(g.at("points"), g.sub("points"));
        g.finish();
        cfg.spectrum_grid.points = static_cast<int>(pts);
        if (!(cfg.spectrum_grid.hi > cfg.spectrum_grid.lo) || cfg.spectrum_grid.lo <= 0.0 ||
            cfg.spectrum_grid.points < 2 || pts != cfg.spectrum_grid.points) {
            throw ConfigError("config.spectrum_grid: requires 0 < lo < hi and integer points >= 2");
        }
    }

    {
        const double mode = number_at(root.at("mode"), root.sub("mode"));
        const double n_max = number_at(root.at("n_max"), root.sub("n_max"));
        cfg.scenario.mode_n = static_cast<int>(mode);
        cfg.scenario.n_max = static_cast<int>(n_max);
        if (cfg.scenario.mode_n < 1 || mode != cfg.scenario.mode_n) {
            throw ConfigError("config.mode: expected a positive integer");
        }
        if (cfg.scenario.n_max < 1 || n_max != cfg.scenario.n_max) {
            throw ConfigError("config.n_max: expected a positive integer");
        }
        if (cfg.scenario.mode_n > cfg.scenario.n_max) {
            throw ConfigError("config.mode: exceeds n_max");
        }
    }

    if (const Json* s = root.get("sense")) {
        Strict sense(*s, root.sub("sense"));
        if (const Json* v = sense.get("force_fwhm")) {
            cfg.force_fwhm =
                parse_quantity(*v, sense.sub("force_fwhm"), UnitKind::frequency, ctx);
        }
        if (const Json* v = sense.get("casimir_gap")) {
            cfg.casimir_gap =
                parse_quantity(*v, sense.sub("casimir_gap"), UnitKind::length, ctx);
        }
        sense.finish();
    }

    if (const Json* p = root.get("paper_reference")) {
        Strict pr(*p, root.sub("paper_reference"));
        if (const Json* v = pr.get("mass_resolution_kg")) {
            cfg.paper_mass_resolution = number_at(*v, pr.sub("mass_resolution_kg"));
        }
        if (const Json* v = pr.get("casimir_force_N")) {
            cfg.paper_casimir = number_at(*v, pr.sub("casimir_force_N"));
        }
        pr.finish();
    }

    if (const Json* s = root.get("sweep")) {
        Strict sw(*s, root.sub("sweep"));
        SweepRequest req;
        const Json& axis = sw.at("axis");
        if (!axis.is_string()) throw ConfigError("config.sweep.axis: expected a string");
        req.axis = parse_axis(axis.get<std::string>(), sw.sub("axis"));
        const Json& values = sw.at("values");
        if (!values.is_array() || values.empty()) {
            throw ConfigError("config.sweep.values: expected a non-empty array");
        }
        double scale = 1.0;
        if (const Json* u = sw.get("units")) {
            if (!u->is_string()) throw ConfigError("config.sweep.units: expected a string");
            const UnitKind kind = req.axis == SweepAxis::pump_intensity
                                      ? UnitKind::intensity
                                      : UnitKind::length;
            if (req.axis == SweepAxis::ar_inf || req.axis == SweepAxis::mode_n) {
                throw ConfigError("config.sweep.units: axis is dimensionless");
            }
            scale = unit_scale(kind, u->get<std::string>(), ctx, sw.sub("units"));
        } else if (req.axis == SweepAxis::r_m || req.axis == SweepAxis::radius ||
                   req.axis == SweepAxis::pump_intensity) {
            throw ConfigError("config.sweep: dimensioned axis requires units");
        }
        for (std::size_t k = 0; k < values.size(); ++k) {
            req.values.push_back(
                number_at(values.at(k), sw.sub("values[" + std::to_string(k) + "]")) * scale);
        }
        sw.finish();
        cfg.sweep = req;
    }

    root.finish();
    return cfg;
}

RunConfig load_config_file(const std::string& path, const std::string& preset) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return load_config(doc, preset);
}

RunConfig load_preset(const std::string& name) {
    return load_config(Json::object(), name);
}

Json RunConfig::metadata() const {
    const Scenario& s = scenario;
    Json m;
    m["tool"] = "lspom";
    m["preset"] = preset_name;
    m["material"] = {
        {"eps_inf_r", s.material.radial().eps_inf},
        {"omega_p_r_rad_s", s.material.radial().omega_p},
        {"gamma_p_r_rad_s", s.material.radial().gamma_p},
        {"eps_inf_t", s.material.tangential().eps_inf},
        {"omega_p_t_rad_s", s.material.tangential().omega_p},
        {"gamma_p_t_rad_s", s.material.tangential().gamma_p},
        {"ar_inf", s.material.ar_inf()},
        {"constraint_mode", s.material.constraint_mode()},
    };
    m["geometry"] = {
        {"radius_m", s.geometry.radius},
        {"distance_m", s.geometry.distance},
        {"nonlocal_warning", s.geometry.nonlocal_warning()},
    };
    m["mechanical"] = {
        {"omega_m_rad_s", s.mech.omega_m},
        {"gamma_rad_s", s.mech.gamma_m},
        {"mass_kg", s.mech.mass},
        {"raman_element_si", s.mech.raman_element},
        {"quantum_yield_inert", quantum_yield},
    };
    Json drive;
    if (s.drive.pump_intensity) drive["pump_intensity_W_m2"] = *s.drive.pump_intensity;
    if (s.drive.probe_intensity) drive["probe_intensity_W_m2"] = *s.drive.probe_intensity;
    if (s.drive.omega_pu_override) drive["omega_pu_override_rad_s"] = *s.drive.omega_pu_override;
    if (s.drive.omega_pr_override) drive["omega_pr_override_rad_s"] = *s.drive.omega_pr_override;
    drive["enhancement"] = s.drive.enhancement;
    if (s.drive.pump_detuning) {
        drive["pump_detuning_rad_s"] = *s.drive.pump_detuning;
        drive["pump_detuning_default_applied"] = false;
    } else if (s.drive.omega_pump) {
        drive["omega_pump_rad_s"] = *s.drive.omega_pump;
        drive["pump_detuning_default_applied"] = false;
    } else {
        drive["pump_detuning_rad_s"] = s.mech.omega_m;
        drive["pump_detuning_default_applied"] = true;
    }
    m["drive"] = drive;
    m["conventions"] = {
        {"delta_sign", "delta = omega_pr - omega_pu"},
        {"probe_window_default", "centered on delta = -omega_m (Stokes-side peak)"},
        {"transmission_rate", "abs(t)^2 with t = 1 - 2 kappa a_plus / Omega_pr"},
        {"pump_detuning_default", "Delta = omega_m"},
        {"frequencies_are_ordinary", frequencies_are_ordinary},
        {"enhancement_default", 10.0},
    };
    m["mode"] = s.mode_n;
    m["n_max"] = s.n_max;
    m["warnings"] = warnings;
    return m;
}

} // namespace lspom
