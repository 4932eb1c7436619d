#pragma once

#include <complex>

#include "lspom/geometry.hpp"
#include "lspom/material.hpp"

namespace lspom {

/// Inputs for one multipole-order scattering evaluation. The host medium is
/// vacuum (eps_1 = 1).
struct MieInputs {
    Geometry geometry;             // only the radius enters here
    AnisotropicMaterial material;
    int n = 1;                     // multipole index, >= 1
    double omega = 0.0;            // angular frequency, rad/s

    double k1() const;             // host wavenumber omega / c
    double size_parameter() const; // k1 * R
};

/// Electric-type (TM) transfer-matrix elements for a radially anisotropic
/// sphere. Exact in the sphere radius; uses Riccati functions of the real
/// effective order inside the sphere.
struct TMatrixN {
    std::complex<double> t11;
    std::complex<double> t12;
};

TMatrixN t_matrix_N(const MieInputs& inputs);

/// Exact electric-type Mie coefficient B_N = -T12 / T11.
std::complex<double> mie_BN_exact(const MieInputs& inputs);

/// Magnetic-type (TE) Mie coefficient. TE waves do not probe the radial
/// permittivity in this geometry, so the isotropic sphere form of order n
/// with eps_t applies. This extends the quasi-static treatment, which drops
/// the TE sector altogether.
std::complex<double> mie_BM_exact(const MieInputs& inputs);

/// Quasi-static electric-type Mie coefficient,
///   B_N = i (k1 R)^{2n+1} [(n+1) eps_t - (nu+1)]
///         / ((2n-1)!! (2n+1)!! [n eps_t + (nu+1)]).
/// Requires k1 R < 0.1; throws ResonanceError at the lossless pole.
std::complex<double> mie_BN_qsa(const MieInputs& inputs);

/// Quasi-static multipole polarizability of the equivalent isotropic sphere,
///   alpha = n (eps_eff - 1) R^{2n+1} / (n eps_eff + n + 1),   units m^{2n+1}.
std::complex<double> polarizability_eff(const MieInputs& inputs);

/// Exact proportionality constant between the quasi-static coefficient and
/// the polarizability: B_N = i k1^{2n+1} (n+1) / (n (2n-1)!! (2n+1)!!) alpha.
double bn_alpha_constant(int n, double k1);

} // namespace lspom
