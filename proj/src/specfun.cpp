#include "lspom/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lspom/errors.hpp"

namespace lspom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286;
constexpr int kMaxSeriesTerms = 200;

bool near_integer(double x, double tol) {
    return std::abs(x - std::round(x)) < tol;
}

// Regularized ascending series S(a, z) = sum_k (-z^2/4)^k / (k! Gamma(k+a)).
// Used for both orders +/-(nu+1/2); a must stay away from non-positive integers.
Complex freq_series(double a, Complex z) {
    const Complex q = -z * z * 0.25;
    Complex term = Complex(1.0 / std::tgamma(a), 0.0);
    Complex sum = term;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        term *= q / ((k + 1.0) * (k + a));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

// z^p with the principal branch.
Complex cpow(Complex z, double p) {
    return std::exp(p * std::log(z));
}

void check_radius(Complex z) {
    if (std::abs(z) > series_z_max) {
        throw ValidityError("spherical Bessel series: |z| exceeds validity radius " +
                            std::to_string(series_z_max));
    }
}

// Irregular companion of j_nu: sqrt(pi/2z) J_{-(nu+1/2)}(z) expressed without
// fractional powers of 1/2: sqrt(pi) 2^nu z^{-nu-1} S(1/2 - nu, z).
Complex sph_bessel_j_reflected(double nu, Complex z) {
    return std::sqrt(kPi) * std::pow(2.0, nu) * cpow(z, -nu - 1.0) *
           freq_series(0.5 - nu, z);
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Cylindrical J_m(z) for integer m >= 0.
Complex cyl_bessel_int(int m, Complex z) {
    return cpow(0.5 * z, m) * freq_series(m + 1.0, z);
}

// Cylindrical Y_m(z) for integer m >= 0 by the ascending logarithmic series;
// the half-odd spherical orders land here where the reflection formula
// degenerates.
Complex cyl_neumann_int(int m, Complex z) {
    const Complex q = z * z * 0.25;

    // finite part: -(z/2)^{-m}/pi sum_{k<m} (m-k-1)!/k! (z^2/4)^k
    Complex finite(0.0, 0.0);
    if (m > 0) {
        Complex term(factorial(m - 1), 0.0);
        finite = term;
        for (int k = 1; k < m; ++k) {
            term *= q / (static_cast<double>(k) * (m - k));
            finite += term;
        }
    }

    // psi series: harmonic numbers stand in for the digamma of integers
    double psi_k = -kEulerGamma;      // psi(1)
    double psi_mk = -kEulerGamma;     // psi(m+1)
    for (int j = 1; j <= m; ++j) psi_mk += 1.0 / j;
    double inv_fact = 1.0 / factorial(m);  // 1/(k! (m+k)!) at k = 0
    Complex qpow(1.0, 0.0);
    Complex psi_sum(0.0, 0.0);
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const Complex term = (psi_k + psi_mk) * inv_fact * qpow;
        psi_sum += term;
        if (k > 0 && std::abs(term) < 1e-16 * std::abs(psi_sum)) break;
        qpow *= -q;
        psi_k += 1.0 / (k + 1.0);
        psi_mk += 1.0 / (m + k + 1.0);
        inv_fact /= (k + 1.0) * (m + k + 1.0);
    }

    const Complex log_part = 2.0 * std::log(0.5 * z) * cyl_bessel_int(m, z);
    return (-cpow(0.5 * z, -m) * finite + log_part - cpow(0.5 * z, m) * psi_sum) / kPi;
}

} // namespace

double gamma_fn(double x) {
    if (x <= 0.0 && near_integer(x, 1e-300)) {
        throw DomainError("gamma_fn: pole at non-positive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

double double_factorial(int k) {
    if (k < -1) throw DomainError("double_factorial: k must be >= -1");
    double result = 1.0;
    for (int i = k; i >= 2; i -= 2) result *= i;
    return result;
}

Complex sph_bessel_j(double nu, Complex z) {
    check_radius(z);
    if (z == Complex(0.0, 0.0)) {
        return nu == 0.0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    // j_nu(z) = sqrt(pi)/2^{nu+1} z^nu S(nu + 3/2, z)
    return std::sqrt(kPi) / std::pow(2.0, nu + 1.0) * cpow(z, nu) *
           freq_series(nu + 1.5, z);
}

Complex sph_bessel_y(double nu, Complex z) {
    check_radius(z);
    if (z == Complex(0.0, 0.0)) {
        throw SingularityError("sph_bessel_y: singular at z = 0");
    }
    const double mu = nu + 0.5;
    if (near_integer(mu, 1e-8)) {
        // half-odd spherical order: the cylindrical order is an integer and
        // the reflection formula degenerates; use the logarithmic series
        const int m = static_cast<int>(std::round(mu));
        const Complex pref = std::sqrt(kPi / 2.0) * cpow(z, -0.5);
        if (m >= 0) return pref * cyl_neumann_int(m, z);
        // Y_{-m} = (-1)^m Y_m
        const int mm = -m;
        const double sign = mm % 2 == 0 ? 1.0 : -1.0;
        return pref * sign * cyl_neumann_int(mm, z);
    }
    const double c = std::cos(mu * kPi);
    const double s = std::sin(mu * kPi);
    return (c * sph_bessel_j(nu, z) - sph_bessel_j_reflected(nu, z)) / s;
}

Complex sph_hankel1(double nu, Complex z) {
    return sph_bessel_j(nu, z) + Complex(0.0, 1.0) * sph_bessel_y(nu, z);
}

RiccatiPair riccati_psi(double nu, Complex z) {
    const Complex j = sph_bessel_j(nu, z);
    // f'_nu = f_{nu-1} - (nu+1)/z f_nu
    const Complex dj = sph_bessel_j(nu - 1.0, z) - (nu + 1.0) / z * j;
    return RiccatiPair{z * j, j + z * dj};
}

RiccatiPair riccati_zeta(double nu, Complex z) {
    const Complex i(0.0, 1.0);
    const Complex h = sph_hankel1(nu, z);
    const Complex hm = sph_bessel_j(nu - 1.0, z) + i * sph_bessel_y(nu - 1.0, z);
    const Complex dh = hm - (nu + 1.0) / z * h;
    return RiccatiPair{z * h, h + z * dh};
}

QsaRiccati qsa_riccati(double nu, Complex z) {
    if (nu < 0.0) throw DomainError("qsa_riccati: nu must be >= 0");
    if (!(std::abs(z) < 0.1)) {
        throw ValidityError("qsa_riccati: requires |z| < 0.1");
    }
    if (z == Complex(0.0, 0.0)) {
        throw SingularityError("qsa_riccati: singular at z = 0");
    }
    const Complex i(0.0, 1.0);
    // Regular part: psi_nu ~ A z^{nu+1}. Irregular part of zeta: -i C z^{-nu}.
    // For non-integer nu the Neumann reflection adds cot((nu+1/2)pi) times the
    // regular part to zeta; without it the small-order error degrades to
    // O(z^{2 nu + 1}).
    const double a_coef = std::sqrt(kPi) / (std::pow(2.0, nu + 1.0) * gamma_fn(nu + 1.5));
    const double c_coef = gamma_fn(nu + 0.5) * std::pow(2.0, nu) / std::sqrt(kPi);
    const double mu = nu + 0.5;
    const double cot = near_integer(mu, 1e-12) ? 0.0
                                               : std::cos(mu * kPi) / std::sin(mu * kPi);
    const Complex regular(1.0, cot);
    // Second irregular term: needed because the leading coefficient of the
    // derivative carries a factor nu, which amplifies the next term's weight
    // by 1/nu for small orders. At half-odd nu the expansion switches to a
    // logarithmic branch; drop the correction there.
    const Complex q1 = near_integer(mu, 1e-6) ? Complex(0.0, 0.0)
                                              : -z * z / (4.0 * (0.5 - nu));
    const Complex zp = cpow(z, nu);  // z^nu
    const Complex zm = 1.0 / zp;     // z^{-nu}
    QsaRiccati out;
    out.psi = a_coef * zp * z;
    out.dpsi = (nu + 1.0) * a_coef * zp;
    out.zeta = -i * c_coef * zm * (1.0 + q1) + regular * out.psi;
    out.dzeta = i * c_coef * zm / z * (nu - (2.0 - nu) * q1) + regular * out.dpsi;
    return out;
}

} // namespace lspom
