#include "lspom/commands.hpp"

#include <cmath>
#include <filesystem>

#include "lspom/errors.hpp"
#include "lspom/io.hpp"

namespace lspom {

namespace {

namespace fs = std::filesystem;

std::string ensure_dir(const std::string& out_dir) {
    fs::create_directories(out_dir);
    return out_dir;
}

std::string path_join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void write_sidecar(const RunConfig& config, const std::string& data_path,
                   const Json& extra) {
    Json meta = config.metadata();
    for (auto it = extra.begin(); it != extra.end(); ++it) meta[it.key()] = it.value();
    write_json(data_path + ".meta.json", meta);
}

std::string flag_name(PointFlag f) {
    switch (f) {
        case PointFlag::ok: return "ok";
        case PointFlag::pole: return "pole";
        case PointFlag::perturbative: return "perturbative";
    }
    return "?";
}

} // namespace

std::string cmd_modes(const RunConfig& config, const std::string& out_dir) {
    const Scenario& s = config.scenario;
    const auto catalog = mode_catalog(s.material, s.geometry, s.mech, s.n_max);
    const double omega_p = s.material.radial().omega_p;

    CsvTable table;
    table.columns = {"n", "omega_n", "omega_over_omega_p", "gamma_ohmic", "gamma_rad",
                     "gamma_total", "kappa", "V_n", "g_op"};
    for (const auto& m : catalog) {
        table.add_row({std::to_string(m.n), format_double(m.omega_n),
                       format_double(m.omega_n / omega_p), format_double(m.gamma_ohmic),
                       format_double(m.gamma_rad), format_double(m.gamma_total),
                       format_double(m.kappa), format_double(m.mode_volume),
                       format_double(m.g_op)});
    }
    const std::string path = path_join(ensure_dir(out_dir), "modes.csv");
    write_csv(path, table);
    write_sidecar(config, path, Json{{"command", "modes"}});
    return path;
}

std::string cmd_spectrum(const RunConfig& config, const std::string& out_dir) {
    const Scenario& s = config.scenario;
    const auto catalog = mode_catalog(s.material, s.geometry, s.mech, s.n_max);
    const double omega_p = s.material.radial().omega_p;
    const SpectrumGrid& g = config.spectrum_grid;

    CsvTable table;
    table.columns = {"omega", "omega_over_omega_p"};
    for (const auto& m : catalog) table.columns.push_back("K_" + std::to_string(m.n));

    const double step = (g.hi - g.lo) / (g.points - 1);
    for (int k = 0; k < g.points; ++k) {
        const double ratio = g.lo + step * k;
        const double omega = ratio * omega_p;
        std::vector<std::string> row{format_double(omega), format_double(ratio)};
        for (const auto& m : catalog) {
            row.push_back(format_double(coupling_spectrum(m, omega)));
        }
        table.add_row(std::move(row));
    }
    const std::string path = path_join(ensure_dir(out_dir), "coupling_spectrum.csv");
    write_csv(path, table);
    write_sidecar(config, path, Json{{"command", "spectrum"}});
    return path;
}

std::string cmd_transmission(const RunConfig& config, const std::string& out_dir,
                             bool figure_axes) {
    const Scenario& s = config.scenario;
    const PlasmonMode mode = make_mode(s.material, s.geometry, s.mech, s.mode_n);
    const Window w = scenario_window(s);

    DriveConfig drive = s.drive;
    drive.delta_grid = linear_grid(w.lo, w.hi, s.grid_points);
    const ProbeSpectrum sp = transmission_spectrum(mode, s.mech, drive);

    // omega_pu implied by the resolved detuning; needed for the figure axis
    const double omega_pu = mode.omega_n - sp.model.delta_pump;

    CsvTable table;
    table.columns = {"delta_rad_s", "re_t", "im_t", "t_sq", "flags"};
    if (figure_axes) table.columns.push_back("delta_fig_rad_s");
    for (std::size_t k = 0; k < sp.delta.size(); ++k) {
        std::vector<std::string> row{
            format_double(sp.delta[k]), format_double(sp.t[k].real()),
            format_double(sp.t[k].imag()), format_double(sp.t_sq[k]),
            flag_name(sp.flags[k])};
        if (figure_axes) {
            // delta_fig = omega_n - omega_pr = Delta - delta
            row.push_back(format_double(sp.model.delta_pump - sp.delta[k]));
        }
        table.add_row(std::move(row));
    }
    const std::string path = path_join(ensure_dir(out_dir), "transmission.csv");
    write_csv(path, table);

    Json extra{{"command", "transmission"}};
    extra["resolved"] = {
        {"mode_n", mode.n},
        {"omega_n_rad_s", mode.omega_n},
        {"kappa_rad_s", mode.kappa},
        {"g_op_rad_s", mode.g_op},
        {"delta_pump_rad_s", sp.model.delta_pump},
        {"omega_pump_rad_s", omega_pu},
        {"omega_pu_drive_rad_s", sp.model.steady.omega_pu},
        {"omega_pr_drive_rad_s", sp.model.omega_pr},
        {"steady_photon_number", sp.model.steady.omega0},
        {"steady_multistable", sp.model.steady.multistable},
        {"figure_axes", figure_axes},
    };
    write_sidecar(config, path, extra);
    return path;
}

std::string cmd_sense(const RunConfig& config, const std::string& out_dir) {
    const Scenario& s = config.scenario;
    const PlasmonMode mode = make_mode(s.material, s.geometry, s.mech, s.mode_n);
    const Window w = scenario_window(s);

    Json doc{{"command", "sense"}};
    Json peak_json;
    std::optional<double> fwhm;

    DriveConfig drive = s.drive;
    drive.delta_grid = linear_grid(w.lo, w.hi, s.grid_points);
    const ProbeSpectrum sp = transmission_spectrum(mode, s.mech, drive);
    try {
        const PeakStats peak = find_peak(sp, w);
        fwhm = peak.fwhm;
        peak_json = {{"center_rad_s", peak.center},
                     {"height", peak.height},
                     {"fwhm_rad_s", peak.fwhm},
                     {"baseline", peak.baseline}};
    } catch (const NumericalError& e) {
        peak_json = {{"error", e.what()}};
    }
    doc["peak"] = peak_json;

    if (config.force_fwhm) {
        fwhm = *config.force_fwhm;
        doc["fwhm_forced_rad_s"] = *config.force_fwhm;
    }
    if (fwhm) {
        const FlaggedValue dm = flag_against_reported(
            mass_resolution(s.mech, *fwhm), config.paper_mass_resolution);
        Json j{{"computed_kg", dm.computed}, {"paper_discrepancy", dm.paper_discrepancy}};
        if (dm.reported) j["reported_kg"] = *dm.reported;
        doc["mass_resolution"] = j;
    } else {
        doc["mass_resolution"] = {{"error", "no linewidth available"}};
    }

    const double gap = config.casimir_gap.value_or(s.geometry.distance - s.geometry.radius);
    const FlaggedValue fc = flag_against_reported(
        std::abs(casimir_force(s.geometry.radius, gap)),
        config.paper_casimir ? std::optional<double>(std::abs(*config.paper_casimir))
                             : std::nullopt);
    Json cj{{"gap_m", gap},
            {"computed_magnitude_N", fc.computed},
            {"attractive", true},
            {"paper_discrepancy", fc.paper_discrepancy}};
    if (fc.reported) cj["reported_magnitude_N"] = *fc.reported;
    doc["casimir"] = cj;

    doc["metadata"] = config.metadata();
    const std::string path = path_join(ensure_dir(out_dir), "sense.json");
    write_json(path, doc);
    return path;
}

std::string cmd_sweep(const RunConfig& config, const std::string& out_dir) {
    if (!config.sweep) throw ConfigError("cmd_sweep: config has no sweep block");
    SweepSpec spec;
    spec.axis = config.sweep->axis;
    spec.values = config.sweep->values;
    spec.base = config.scenario;
    const auto rows = run_sweep(spec);

    CsvTable table;
    table.columns = {"axis", "axis_value", "n", "omega_n", "gamma_rad", "gamma_total",
                     "V_n", "g_op", "peak_center", "peak_height", "peak_fwhm",
                     "peak_baseline", "delta_m", "status"};
    for (const auto& r : rows) {
        table.add_row({to_string(spec.axis), format_double(r.axis_value),
                       std::to_string(r.n), format_double(r.mode.omega_n),
                       format_double(r.mode.gamma_rad), format_double(r.mode.gamma_total),
                       format_double(r.mode.mode_volume), format_double(r.mode.g_op),
                       r.peak ? format_double(r.peak->center) : "nan",
                       r.peak ? format_double(r.peak->height) : "nan",
                       r.peak ? format_double(r.peak->fwhm) : "nan",
                       r.peak ? format_double(r.peak->baseline) : "nan",
                       r.delta_m ? format_double(*r.delta_m) : "nan",
                       r.error.empty() ? "ok" : "error"});
    }
    const std::string path = path_join(ensure_dir(out_dir), "sweep.csv");
    write_csv(path, table);
    write_sidecar(config, path,
                  Json{{"command", "sweep"}, {"axis", to_string(spec.axis)}});
    return path;
}

} // namespace lspom
