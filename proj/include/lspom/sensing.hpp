#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lspom/errors.hpp"
#include "lspom/response.hpp"

namespace lspom {

/// No interior maximum inside the requested window.
class PeakNotFoundError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Peak found, but a half-maximum crossing falls outside the window.
class PeakTruncatedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Extracted peak of a spectrum.
struct PeakStats {
    double center = 0.0;    // rad/s
    double height = 0.0;    // response value at the peak
    double fwhm = 0.0;      // rad/s
    double baseline = 0.0;  // background level near the window edges
};

/// Detuning window [lo, hi].
struct Window {
    double lo = 0.0;
    double hi = 0.0;
};

/// Locate the dominant peak of a continuous response inside a window.
/// The seed grid provides the coarse argmax; the center is refined by local
/// quadratic interpolation and the half-maximum crossings by bisection on the
/// continuous function itself. The baseline is the median of the outermost
/// 10% of window samples.
///
/// Throws NumericalError when the window holds no interior maximum
/// (monotone data) or when a half-max crossing leaves the window (peak
/// truncated at an edge).
PeakStats find_peak(const std::function<double(double)>& response, Window window,
                    std::span<const double> seed_grid);

/// Same, re-evaluating the stored response model of a computed spectrum.
/// Requires at least 16 grid points inside the window.
PeakStats find_peak(const ProbeSpectrum& spectrum, Window window);

/// Minimum resolvable mass from a spectral linewidth: dm = 2 m dw / omega_m.
double mass_resolution(const MechanicalMode& mech, double fwhm);

/// Sphere-plate Casimir force, F = -pi^3 hbar c R / (360 h^3), newtons
/// (negative = attractive). R is the sphere radius, h the surface gap.
double casimir_force(double radius, double gap);

/// A computed value paired with an externally reported one; flagged when they
/// disagree by more than 10%.
struct FlaggedValue {
    double computed = 0.0;
    std::optional<double> reported;
    bool paper_discrepancy = false;
};

FlaggedValue flag_against_reported(double computed, std::optional<double> reported);

/// Swept parameter of a scan.
enum class SweepAxis { ar_inf, r_m, mode_n, pump_intensity, radius };

std::string to_string(SweepAxis axis);

/// Resolved physical inputs for one scenario run (material through drive).
struct Scenario {
    AnisotropicMaterial material = AnisotropicMaterial::isotropic(
        DrudeModel{1.0, 1.0, 0.0});
    Geometry geometry;
    MechanicalMode mech;
    DriveConfig drive;          // delta_grid ignored by sweeps (rebuilt per run)
    int mode_n = 1;             // mode driven in the response
    int n_max = 4;              // catalog depth
    int grid_points = 2001;     // probe grid resolution
    double window_halfwidth = 0.0; // peak window half-width, rad/s; 0 = 25 gamma_m
    std::optional<double> window_center; // rad/s; default -omega_m (the
                                         // amplified Stokes-side feature)
};

/// One sweep result row.
struct SweepRow {
    double axis_value = 0.0;
    int n = 0;
    PlasmonMode mode;
    std::optional<PeakStats> peak;
    std::optional<double> delta_m; // kg
    std::string error;             // empty on success
};

/// Sweep description: axis, ordered values, base scenario.
struct SweepSpec {
    SweepAxis axis = SweepAxis::r_m;
    std::vector<double> values;
    Scenario base;
};

/// Scenario with one axis value substituted.
Scenario apply_axis(const Scenario& base, SweepAxis axis, double value);

/// Evaluate the response for every mode of the catalog at a fixed scenario;
/// one row per mode. Row-level failures are recorded, not fatal.
std::vector<SweepRow> run_scenario_rows(const Scenario& scenario, double axis_value);

/// Full sweep: rows for every (axis value, mode) pair in order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Probe window and grid used by scenario evaluation (exposed for tests).
Window scenario_window(const Scenario& scenario);

} // namespace lspom
