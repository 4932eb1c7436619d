#pragma once

#include <complex>
#include <vector>

#include "lspom/geometry.hpp"
#include "lspom/material.hpp"

namespace lspom {

/// Breathing-like vibrational mode of the nanoribbon. All rates angular (rad/s).
struct MechanicalMode {
    double omega_m = 0.0;        // mode frequency, rad/s
    double gamma_m = 0.0;        // damping rate, rad/s
    double mass = 0.0;           // total mass, kg
    double raman_element = 0.0;  // Raman tensor element R_xx in SI (F m / sqrt(kg))

    static MechanicalMode make(double omega_m, double gamma_m, double mass,
                               double raman_element);
};

/// Convert a squared Raman element quoted as a polarizability volume
/// (m^4/kg, e.g. Angstrom^4/amu) into the SI element used by the coupling
/// formulas: R_SI = 4 pi eps0 sqrt(R_vol^2). Single conversion point.
double raman_si_from_volume_sq(double volume_sq_m4_per_kg);

/// One localized-surface-plasmon mode of the (effective) sphere.
struct PlasmonMode {
    int n = 1;                 // multipole index
    double omega_n = 0.0;      // resonance frequency, rad/s
    double gamma_ohmic = 0.0;  // ohmic (Joule) width = material gamma_p, rad/s
    double gamma_rad = 0.0;    // radiative width, rad/s
    double gamma_total = 0.0;  // gamma_ohmic + gamma_rad
    double kappa = 0.0;        // amplitude decay rate = gamma_total / 2
    double mode_volume = 0.0;  // effective mode volume, m^{3} for n = 1 (m^{2n+4}/m^{2n+1})
    double g_op = 0.0;         // optomechanical coupling strength, rad/s
};

/// LSP resonance frequency omega_n = omega_p_eff sqrt(n / (n eps_inf_eff + n + 1)).
double lsp_frequency(const AnisotropicMaterial& material, int n);

/// Radiation damping width of mode n (size-dependent, (k_n R)^{2n+1} law).
double radiative_width(const AnisotropicMaterial& material, const Geometry& geometry, int n);

/// Effective mode volume
///   V_n = 8 pi (n eps_inf_eff + n + 1) r_m^{2n+4} / (n (n+1) (2n+1) R^{2n+1}).
double mode_volume(const AnisotropicMaterial& material, const Geometry& geometry, int n);

/// Optomechanical coupling strength g_op = R sqrt(hbar / 2 omega_m) omega_n / (eps0 V_n).
double coupling_strength(const AnisotropicMaterial& material, const Geometry& geometry,
                         const MechanicalMode& mech, int n);

/// Full per-mode record (frequency, widths, volume, coupling).
PlasmonMode make_mode(const AnisotropicMaterial& material, const Geometry& geometry,
                      const MechanicalMode& mech, int n);

/// Modes n = 1 .. n_max.
std::vector<PlasmonMode> mode_catalog(const AnisotropicMaterial& material,
                                      const Geometry& geometry,
                                      const MechanicalMode& mech, int n_max);

/// Near-field optomechanical coupling spectrum K_n(omega): a unit-area
/// Lorentzian centered on omega_n of width gamma_total, scaled by g_op / 2
/// (so that 2 * integral K_n d omega = g_op). Dimensionless, non-negative.
double coupling_spectrum(const AnisotropicMaterial& material, const Geometry& geometry,
                         const MechanicalMode& mech, int n, double omega);
double coupling_spectrum(const PlasmonMode& mode, double omega);

/// Scattering part of the tangential Green's function at the nanoribbon,
/// summed over multipoles up to n_max.
struct TangentialGreens {
    std::complex<double> value;     // 1/m
    bool truncation_warning = false; // term ratio >= 1 at n_max (non-convergent)
    double last_term_ratio = 0.0;    // |term(n_max)| / |partial sum|
};

TangentialGreens greens_tangential(const AnisotropicMaterial& material,
                                   const Geometry& geometry, double omega, int n_max);

// Default multipole cutoff for the Green's-function sum.
inline constexpr int default_greens_n_max = 12;

} // namespace lspom
