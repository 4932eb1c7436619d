#pragma once

#include <string>

#include "lspom/config.hpp"

namespace lspom {

/// File-emitting command implementations behind the CLI verbs. Each writes
/// its data file(s) plus a .meta.json sidecar into out_dir and returns the
/// primary file path. Outputs are deterministic for identical configs.

/// Mode catalog CSV: one row per multipole order n <= n_max.
std::string cmd_modes(const RunConfig& config, const std::string& out_dir);

/// Coupling-spectra CSV: K_n columns over an omega/omega_p grid.
std::string cmd_spectrum(const RunConfig& config, const std::string& out_dir);

/// Probe transmission CSV over the detuning grid for the selected mode.
/// figure_axes additionally emits the axis delta_fig = omega_n - omega_pr.
std::string cmd_transmission(const RunConfig& config, const std::string& out_dir,
                             bool figure_axes = false);

/// Sensing summary JSON: peak statistics, mass resolution, Casimir estimate,
/// discrepancy flags against configured reported values.
std::string cmd_sense(const RunConfig& config, const std::string& out_dir);

/// Parameter sweep CSV: one row per (axis value, mode).
std::string cmd_sweep(const RunConfig& config, const std::string& out_dir);

} // namespace lspom
