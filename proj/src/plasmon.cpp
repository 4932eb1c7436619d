#include "lspom/plasmon.hpp"

#include <cmath>
#include <numbers>

#include "lspom/constants.hpp"
#include "lspom/errors.hpp"
#include "lspom/mie.hpp"
#include "lspom/specfun.hpp"

namespace lspom {

namespace {
constexpr double kPi = std::numbers::pi;
}

Geometry Geometry::make(double radius, double distance) {
    if (!(radius > 0.0)) throw DomainError("Geometry: radius must be positive");
    if (!(distance > radius)) {
        throw DomainError("Geometry: distance must exceed the sphere radius");
    }
    return Geometry{radius, distance};
}

MechanicalMode MechanicalMode::make(double omega_m, double gamma_m, double mass,
                                    double raman_element) {
    if (!(omega_m > 0.0) || !(gamma_m > 0.0) || !(mass > 0.0) || !(raman_element > 0.0)) {
        throw DomainError("MechanicalMode: all parameters must be strictly positive");
    }
    return MechanicalMode{omega_m, gamma_m, mass, raman_element};
}

double raman_si_from_volume_sq(double volume_sq_m4_per_kg) {
    if (!(volume_sq_m4_per_kg > 0.0)) {
        throw DomainError("raman_si_from_volume_sq: squared element must be positive");
    }
    return 4.0 * kPi * eps0 * std::sqrt(volume_sq_m4_per_kg);
}

double lsp_frequency(const AnisotropicMaterial& material, int n) {
    const DrudeModel eff = effective_drude(material, n);
    const double nn = static_cast<double>(n);
    return eff.omega_p * std::sqrt(nn / (nn * eff.eps_inf + nn + 1.0));
}

double radiative_width(const AnisotropicMaterial& material, const Geometry& geometry, int n) {
    const DrudeModel eff = effective_drude(material, n);
    const double nn = static_cast<double>(n);
    const double wn = lsp_frequency(material, n);
    const double knR = wn / c_light * geometry.radius;
    return wn * (2.0 * nn + 1.0) * (nn + 1.0) * std::pow(knR, 2 * n + 1) /
           (nn * (nn * eff.eps_inf + nn + 1.0) *
            double_factorial(2 * n - 1) * double_factorial(2 * n + 1));
}

double mode_volume(const AnisotropicMaterial& material, const Geometry& geometry, int n) {
    const DrudeModel eff = effective_drude(material, n);
    const double nn = static_cast<double>(n);
    return 8.0 * kPi * (nn * eff.eps_inf + nn + 1.0) *
           std::pow(geometry.distance, 2 * n + 4) /
           (nn * (nn + 1.0) * (2.0 * nn + 1.0) * std::pow(geometry.radius, 2 * n + 1));
}

double coupling_strength(const AnisotropicMaterial& material, const Geometry& geometry,
                         const MechanicalMode& mech, int n) {
    const double wn = lsp_frequency(material, n);
    const double vn = mode_volume(material, geometry, n);
    return mech.raman_element * std::sqrt(hbar / (2.0 * mech.omega_m)) * wn / (eps0 * vn);
}

PlasmonMode make_mode(const AnisotropicMaterial& material, const Geometry& geometry,
                      const MechanicalMode& mech, int n) {
    PlasmonMode m;
    m.n = n;
    m.omega_n = lsp_frequency(material, n);
    m.gamma_ohmic = material.radial().gamma_p;
    m.gamma_rad = radiative_width(material, geometry, n);
    m.gamma_total = m.gamma_ohmic + m.gamma_rad;
    m.kappa = m.gamma_total / 2.0;
    m.mode_volume = mode_volume(material, geometry, n);
    m.g_op = coupling_strength(material, geometry, mech, n);
    return m;
}

std::vector<PlasmonMode> mode_catalog(const AnisotropicMaterial& material,
                                      const Geometry& geometry,
                                      const MechanicalMode& mech, int n_max) {
    if (n_max < 1) throw DomainError("mode_catalog: n_max must be >= 1");
    std::vector<PlasmonMode> modes;
    modes.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        modes.push_back(make_mode(material, geometry, mech, n));
    }
    return modes;
}

double coupling_spectrum(const PlasmonMode& mode, double omega) {
    // closed Lorentzian form, evaluable on the whole axis; physically
    // meaningful near omega_n
    const double half = mode.gamma_total / 2.0;
    const double d = omega - mode.omega_n;
    const double lorentz = (mode.gamma_total / (2.0 * kPi)) / (d * d + half * half);
    return 0.5 * mode.g_op * lorentz;
}

double coupling_spectrum(const AnisotropicMaterial& material, const Geometry& geometry,
                         const MechanicalMode& mech, int n, double omega) {
    return coupling_spectrum(make_mode(material, geometry, mech, n), omega);
}

TangentialGreens greens_tangential(const AnisotropicMaterial& material,
                                   const Geometry& geometry, double omega, int n_max) {
    if (n_max < 1) throw DomainError("greens_tangential: n_max must be >= 1");
    if (!(omega > 0.0)) throw DomainError("greens_tangential: omega must be positive");

    const Complex i(0.0, 1.0);
    const double k1 = omega / c_light;
    const Complex xr(k1 * geometry.distance, 0.0);

    Complex sum(0.0, 0.0);
    Complex last_term(0.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        MieInputs in{geometry, material, n, omega};
        const Complex bn = mie_BN_exact(in);
        const Complex bm = mie_BM_exact(in);
        const RiccatiPair zeta = riccati_zeta(static_cast<double>(n), xr);
        const Complex h = sph_hankel1(static_cast<double>(n), xr);
        const Complex zp_over = zeta.derivative / xr;
        last_term = (2.0 * n + 1.0) * (bn * zp_over * zp_over + bm * h * h);
        sum += last_term;
    }
    TangentialGreens out;
    out.value = i * omega / (8.0 * kPi * c_light) * sum;
    const double sum_mag = std::abs(sum);
    out.last_term_ratio = sum_mag > 0.0 ? std::abs(last_term) / sum_mag : 0.0;
    out.truncation_warning = out.last_term_ratio >= 1.0;
    return out;
}

} // namespace lspom
