#include "lspom/mie.hpp"

#include <cmath>

#include "lspom/constants.hpp"
#include "lspom/errors.hpp"
#include "lspom/specfun.hpp"

namespace lspom {

namespace {

using std::complex;

// Principal square root nudged onto the decaying-wave branch (Im >= 0).
Complex sqrt_upper_half(Complex w) {
    Complex s = std::sqrt(w);
    if (s.imag() < 0.0) s = -s;
    return s;
}

// Real effective order for the internal radial solutions. Complex anisotropy
// ratios would need complex-order Bessel functions, which are out of scope.
double real_effective_order(const MieInputs& in) {
    if (in.material.constraint_mode()) {
        return effective_order(in.n, in.material.ar_inf());
    }
    const Complex nu = effective_order_c(in.n, in.material.anisotropy_ratio(in.omega));
    if (std::abs(nu.imag()) > 1e-9 * std::max(1.0, std::abs(nu.real()))) {
        throw ValidityError("t_matrix_N: complex effective order (material outside the "
                            "constant-anisotropy constraint); not supported");
    }
    return nu.real();
}

void check_inputs(const MieInputs& in) {
    if (in.n < 1) throw DomainError("mie: multipole index must be >= 1");
    if (!(in.omega > 0.0)) throw DomainError("mie: omega must be positive");
    if (!(in.geometry.radius > 0.0)) throw DomainError("mie: radius must be positive");
}

} // namespace

double MieInputs::k1() const { return omega / c_light; }
double MieInputs::size_parameter() const { return k1() * geometry.radius; }

TMatrixN t_matrix_N(const MieInputs& in) {
    check_inputs(in);
    const double nu = real_effective_order(in);
    const double x1 = in.size_parameter();
    const Complex eps_t = drude_eps(in.material.tangential(), in.omega);

    // s = sqrt(eps_t) fixes the internal wavenumber x_t = s*x1 and the
    // impedance ratio 1/eta_t = s on a single consistent branch.
    const Complex s = sqrt_upper_half(eps_t);
    const Complex xt = s * x1;

    const RiccatiPair psi_t = riccati_psi(nu, xt);
    const RiccatiPair zeta_t = riccati_zeta(nu, xt);
    const RiccatiPair psi_1 = riccati_psi(static_cast<double>(in.n), Complex(x1, 0.0));
    const RiccatiPair zeta_1 = riccati_zeta(static_cast<double>(in.n), Complex(x1, 0.0));

    const Complex denom = s * (psi_t.value * zeta_t.derivative -
                               zeta_t.value * psi_t.derivative);
    const Complex t11_num = s * psi_t.value * zeta_1.derivative -
                            zeta_1.value * psi_t.derivative;
    const Complex t12_num = s * psi_t.value * psi_1.derivative -
                            psi_1.value * psi_t.derivative;
    return TMatrixN{t11_num / denom, t12_num / denom};
}

complex<double> mie_BN_exact(const MieInputs& in) {
    const TMatrixN t = t_matrix_N(in);
    const double scale = std::max(std::abs(t.t11), std::abs(t.t12));
    if (std::abs(t.t11) < 1e-12 * scale || t.t11 == Complex(0.0, 0.0)) {
        throw ResonanceError("mie_BN_exact: degenerate T-matrix (T11 ~ 0)");
    }
    return -t.t12 / t.t11;
}

complex<double> mie_BM_exact(const MieInputs& in) {
    check_inputs(in);
    const double x1 = in.size_parameter();
    const Complex eps_t = drude_eps(in.material.tangential(), in.omega);
    const Complex s = sqrt_upper_half(eps_t);
    const Complex xt = s * x1;
    const double n = static_cast<double>(in.n);

    const RiccatiPair psi_t = riccati_psi(n, xt);
    const RiccatiPair psi_1 = riccati_psi(n, Complex(x1, 0.0));
    const RiccatiPair zeta_1 = riccati_zeta(n, Complex(x1, 0.0));

    // Isotropic TE coefficient (unit permeability): B_M = -b_n.
    const Complex b_num = psi_t.value * psi_1.derivative - s * psi_1.value * psi_t.derivative;
    const Complex b_den = psi_t.value * zeta_1.derivative - s * zeta_1.value * psi_t.derivative;
    if (b_den == Complex(0.0, 0.0)) {
        throw ResonanceError("mie_BM_exact: degenerate denominator");
    }
    return -b_num / b_den;
}

complex<double> mie_BN_qsa(const MieInputs& in) {
    check_inputs(in);
    const double x1 = in.size_parameter();
    if (!(x1 < 0.1)) {
        throw ValidityError("mie_BN_qsa: requires k1*R < 0.1");
    }
    const int n = in.n;
    const Complex eps_t = drude_eps(in.material.tangential(), in.omega);
    const Complex nu = in.material.constraint_mode()
        ? Complex(effective_order(n, in.material.ar_inf()), 0.0)
        : effective_order_c(n, in.material.anisotropy_ratio(in.omega));

    const double nn = static_cast<double>(n);
    const Complex numer = (nn + 1.0) * eps_t - (nu + 1.0);
    const Complex denom = nn * eps_t + (nu + 1.0);
    const double scale = std::abs(nn * eps_t) + std::abs(nu + 1.0);
    if (std::abs(denom) < 1e-12 * scale) {
        throw ResonanceError("mie_BN_qsa: lossless resonance pole (n eps_t + nu + 1 ~ 0)");
    }
    const double df = double_factorial(2 * n - 1) * double_factorial(2 * n + 1);
    return Complex(0.0, 1.0) * std::pow(x1, 2 * n + 1) * numer / (df * denom);
}

complex<double> polarizability_eff(const MieInputs& in) {
    check_inputs(in);
    if (!(in.size_parameter() < 0.1)) {
        throw ValidityError("polarizability_eff: requires k1*R < 0.1");
    }
    const double nn = static_cast<double>(in.n);
    const Complex eps_eff = effective_eps(in.material, in.n, in.omega);
    const Complex denom = nn * eps_eff + nn + 1.0;
    const double scale = std::abs(nn * eps_eff) + nn + 1.0;
    if (std::abs(denom) < 1e-12 * scale) {
        throw ResonanceError("polarizability_eff: lossless resonance pole");
    }
    return nn * (eps_eff - 1.0) * std::pow(in.geometry.radius, 2 * in.n + 1) / denom;
}

double bn_alpha_constant(int n, double k1) {
    const double nn = static_cast<double>(n);
    return std::pow(k1, 2 * n + 1) * (nn + 1.0) /
           (nn * double_factorial(2 * n - 1) * double_factorial(2 * n + 1));
}

} // namespace lspom
