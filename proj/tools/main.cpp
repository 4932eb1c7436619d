#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "lspom/commands.hpp"
#include "lspom/errors.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::string out_dir = "out";
    int mode = 0;  // 0 = keep config value
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "config file (JSON)");
    cmd->add_option("--preset", opts.preset, "named preset supplying defaults");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--mode", opts.mode, "multipole index driven in the response");
}

lspom::RunConfig load(const CommonOpts& opts) {
    if (opts.config_path.empty() && opts.preset.empty()) {
        throw lspom::ConfigError("need --config and/or --preset");
    }
    lspom::RunConfig cfg = opts.config_path.empty()
                               ? lspom::load_preset(opts.preset)
                               : lspom::load_config_file(opts.config_path, opts.preset);
    if (opts.mode > 0) {
        cfg.scenario.mode_n = opts.mode;
        if (cfg.scenario.mode_n > cfg.scenario.n_max) {
            throw lspom::ConfigError("--mode exceeds n_max");
        }
    }
    for (const auto& w : cfg.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"localized-surface-plasmon optomechanics simulator"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool figure_axes = false;

    CLI::App* modes = app.add_subcommand("modes", "tabulate the plasmon mode catalog");
    add_common(modes, opts);
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "optomechanical coupling spectra K_n(omega)");
    add_common(spectrum, opts);
    CLI::App* transmission =
        app.add_subcommand("transmission", "pump-probe transmission spectrum");
    add_common(transmission, opts);
    transmission->add_flag("--figure-axes", figure_axes,
                           "also emit the axis delta_fig = omega_n - omega_pr");
    CLI::App* sense = app.add_subcommand("sense", "peak statistics and mass resolution");
    add_common(sense, opts);
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep from the config");
    add_common(sweep, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        std::string path;
        if (modes->parsed()) path = lspom::cmd_modes(load(opts), opts.out_dir);
        if (spectrum->parsed()) path = lspom::cmd_spectrum(load(opts), opts.out_dir);
        if (transmission->parsed()) {
            path = lspom::cmd_transmission(load(opts), opts.out_dir, figure_axes);
        }
        if (sense->parsed()) path = lspom::cmd_sense(load(opts), opts.out_dir);
        if (sweep->parsed()) path = lspom::cmd_sweep(load(opts), opts.out_dir);
        std::printf("%s\n", path.c_str());
        return 0;
    } catch (const lspom::ConfigError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const lspom::DomainError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
}
