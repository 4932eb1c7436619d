#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lspom/plasmon.hpp"

namespace lspom {

/// Coherent drive coupling rate for one plasmon mode illuminated at intensity
/// I (W/m^2) with near-field enhancement factor f:
///   E_inc = sqrt(2 I / (eps0 c)),  E_m = f E_inc,
///   Omega = kappa_n sqrt(eps0 V_n / (2 hbar omega_n)) E_m / 2.
double drive_coupling(const PlasmonMode& mode, double intensity, double enhancement);

/// Pump/probe drive description. Intensities are converted through
/// drive_coupling; direct Omega overrides bypass the conversion.
struct DriveConfig {
    std::optional<double> pump_intensity;   // W/m^2
    std::optional<double> probe_intensity;  // W/m^2
    std::optional<double> omega_pu_override; // rad/s, wins over pump_intensity
    std::optional<double> omega_pr_override; // rad/s, wins over probe_intensity
    double enhancement = 10.0;               // near-field enhancement factor >= 1
    std::optional<double> pump_detuning;     // Delta = omega_n - omega_pu, rad/s
    std::optional<double> omega_pump;        // pump frequency, rad/s; used when no
                                             // explicit detuning is given
    // With neither field set, Delta defaults to omega_m (standard sideband
    // drive condition).
    std::vector<double> delta_grid;          // probe-pump detunings, rad/s, increasing
};

/// Drive rates and detuning resolved against a specific mode.
struct ResolvedDrive {
    double delta_pump = 0.0;   // Delta = omega_n - omega_pu
    double omega_pu = 0.0;     // pump drive rate, rad/s
    double omega_pr = 0.0;     // probe drive rate, rad/s
    bool weak_probe_ok = true; // Omega_pr / Omega_pu < 0.1
};

ResolvedDrive resolve_drive(const PlasmonMode& mode, const MechanicalMode& mech,
                            const DriveConfig& drive);

/// Steady state of the driven mode. omega0 = |a0|^2 solves the real cubic
///   omega0 [ (Delta - 2 g^2 omega0 / omega_m)^2 + kappa^2 ] = Omega_pu^2.
struct SteadyState {
    std::complex<double> a0;       // mean plasmon amplitude
    double omega0 = 0.0;           // mean photon number |a0|^2
    double n0 = 0.0;               // mean mechanical displacement 2 g omega0 / omega_m
    double omega_pu = 0.0;         // drive rate that produced this state, rad/s
    bool multistable = false;      // cubic has several admissible roots
    std::vector<double> all_roots; // all non-negative real roots, ascending
};

/// Solve the steady state; with several admissible roots the smallest is
/// returned and the multistability flag set.
SteadyState steady_state(const PlasmonMode& mode, const MechanicalMode& mech,
                         double delta_pump, double omega_pu);

/// Linearized probe response at probe-pump detuning delta.
struct ProbeResponse {
    std::complex<double> a_plus;  // probe-sideband amplitude
    std::complex<double> a_minus; // idler sideband (stored, not analyzed)
    std::complex<double> t;       // transmission t = 1 - 2 kappa a_plus / Omega_pr
    double transmission_rate = 0.0; // |t|^2
    // Auxiliaries of the linearized solution.
    std::complex<double> w, x, y, z;
    double perturbative_ratio = 0.0; // |a_plus| Omega_pr / (|a0| Omega_pu)
};

ProbeResponse probe_amplitude(const PlasmonMode& mode, const MechanicalMode& mech,
                              const SteadyState& ss, double delta_pump, double delta,
                              double omega_pr);

/// Per-point status flags in a computed spectrum.
enum class PointFlag : std::uint8_t {
    ok = 0,
    pole = 1,         // response denominator vanished at this grid point
    perturbative = 2, // perturbative-expansion validity strained
};

/// Everything needed to re-evaluate the response continuously.
struct ResponseModel {
    PlasmonMode mode;
    MechanicalMode mech;
    SteadyState steady;
    double delta_pump = 0.0;
    double omega_pr = 0.0;

    std::complex<double> t(double delta) const;
    double t_sq(double delta) const;
};

/// Probe transmission over a detuning grid.
struct ProbeSpectrum {
    ResponseModel model;
    std::vector<double> delta;            // rad/s
    std::vector<std::complex<double>> t;  // complex transmission
    std::vector<double> t_sq;             // |t|^2
    std::vector<PointFlag> flags;
};

/// Evaluate the probe response across drive.delta_grid at the resolved pump
/// detuning. Pole hits are flagged per point, not fatal.
ProbeSpectrum transmission_spectrum(const PlasmonMode& mode, const MechanicalMode& mech,
                                    const DriveConfig& drive);

/// Strictly increasing linear grid helper.
std::vector<double> linear_grid(double lo, double hi, int points);

} // namespace lspom
