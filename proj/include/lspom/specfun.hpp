#pragma once

#include <complex>

namespace lspom {

using Complex = std::complex<double>;

/// Euler gamma function. Throws DomainError at the poles (non-positive integers).
double gamma_fn(double x);

/// Double factorial k!! = k (k-2) (k-4) ... with (-1)!! = 0!! = 1.
/// Throws DomainError for k < -1.
double double_factorial(int k);

// Validity radius of the ascending-series evaluation. Beyond this the
// alternating series loses too many digits in double precision.
inline constexpr double series_z_max = 30.0;

/// Spherical Bessel function j_nu(z) for real order nu >= -1 and complex
/// argument, evaluated by the ascending power series (truncated when the next
/// term falls below 1e-16 of the partial sum). Throws ValidityError for
/// |z| > series_z_max.
Complex sph_bessel_j(double nu, Complex z);

/// Spherical Neumann function y_nu(z) via the reflection formula. Throws
/// SingularityError at z = 0 and ValidityError when nu is within 1e-8 of a
/// half-odd integer (the reflection formula degenerates there).
Complex sph_bessel_y(double nu, Complex z);

/// Spherical Hankel function of the first kind, h1 = j + i y.
Complex sph_hankel1(double nu, Complex z);

/// A Riccati function value together with its derivative in the argument.
struct RiccatiPair {
    Complex value;
    Complex derivative;
};

/// Riccati-Bessel psi_nu(z) = z j_nu(z) and psi'_nu(z).
RiccatiPair riccati_psi(double nu, Complex z);

/// Riccati-Hankel zeta_nu(z) = z h1_nu(z) and zeta'_nu(z).
RiccatiPair riccati_zeta(double nu, Complex z);

/// Small-argument (quasi-static) forms of the four Riccati components.
/// Each retains the leading regular and irregular contributions so that the
/// relative error against the exact series is O(z^2) for every nu >= 0.
struct QsaRiccati {
    Complex psi;
    Complex zeta;
    Complex dpsi;
    Complex dzeta;
};

/// Quasi-static Riccati asymptotics; enforced validity |z| < 0.1.
QsaRiccati qsa_riccati(double nu, Complex z);

} // namespace lspom
