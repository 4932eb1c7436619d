#include "lspom/material.hpp"

#include <cmath>
#include <string>

#include "lspom/errors.hpp"

namespace lspom {

Complex DrudeModel::eps(double omega) const {
    return drude_eps(*this, omega);
}

Complex drude_eps(const DrudeModel& model, double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("drude_eps: omega must be positive, got " + std::to_string(omega));
    }
    const Complex denom = omega * Complex(omega, model.gamma_p);
    return Complex(model.eps_inf, 0.0) - model.omega_p * model.omega_p / denom;
}

AnisotropicMaterial AnisotropicMaterial::from_radial_and_ar(const DrudeModel& radial,
                                                            double ar_inf) {
    if (!(ar_inf > 0.0)) {
        throw DomainError("AnisotropicMaterial: AR_inf must be positive");
    }
    if (!(radial.omega_p > 0.0) || radial.gamma_p < 0.0 || !(radial.eps_inf > 0.0)) {
        throw DomainError("AnisotropicMaterial: invalid radial Drude parameters");
    }
    AnisotropicMaterial m;
    m.radial_ = radial;
    m.tangential_ = DrudeModel{radial.eps_inf * ar_inf,
                               radial.omega_p * std::sqrt(ar_inf),
                               radial.gamma_p};
    m.ar_inf_ = ar_inf;
    m.constraint_mode_ = true;
    return m;
}

AnisotropicMaterial AnisotropicMaterial::from_components(const DrudeModel& radial,
                                                         const DrudeModel& tangential) {
    if (!(radial.omega_p > 0.0) || radial.gamma_p < 0.0 || !(radial.eps_inf > 0.0) ||
        !(tangential.omega_p > 0.0) || tangential.gamma_p < 0.0 || !(tangential.eps_inf > 0.0)) {
        throw DomainError("AnisotropicMaterial: invalid Drude parameters");
    }
    AnisotropicMaterial m;
    m.radial_ = radial;
    m.tangential_ = tangential;
    m.ar_inf_ = tangential.eps_inf / radial.eps_inf;
    const double lhs = radial.omega_p * radial.omega_p / radial.eps_inf;
    const double rhs = tangential.omega_p * tangential.omega_p / tangential.eps_inf;
    const bool plasma_ok = std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), std::abs(rhs));
    m.constraint_mode_ = plasma_ok && radial.gamma_p == tangential.gamma_p;
    return m;
}

AnisotropicMaterial AnisotropicMaterial::isotropic(const DrudeModel& model) {
    return from_radial_and_ar(model, 1.0);
}

Complex AnisotropicMaterial::anisotropy_ratio(double omega) const {
    if (constraint_mode_) return Complex(ar_inf_, 0.0);
    return drude_eps(tangential_, omega) / drude_eps(radial_, omega);
}

double effective_order(int n, double ar) {
    if (n < 1) throw DomainError("effective_order: n must be >= 1");
    if (!(ar > 0.0)) throw DomainError("effective_order: AR must be positive");
    const double nn = static_cast<double>(n);
    return std::sqrt(nn * (nn + 1.0) * ar + 0.25) - 0.5;
}

Complex effective_order_c(int n, Complex ar) {
    if (n < 1) throw DomainError("effective_order_c: n must be >= 1");
    const double nn = static_cast<double>(n);
    return std::sqrt(nn * (nn + 1.0) * ar + 0.25) - 0.5;
}

Complex effective_eps(const AnisotropicMaterial& material, int n, double omega) {
    const Complex eps_r = drude_eps(material.radial(), omega);
    if (material.constraint_mode()) {
        const double nu = effective_order(n, material.ar_inf());
        return (nu / static_cast<double>(n)) * eps_r;
    }
    const Complex nu = effective_order_c(n, material.anisotropy_ratio(omega));
    return (nu / static_cast<double>(n)) * eps_r;
}

DrudeModel effective_drude(const AnisotropicMaterial& material, int n) {
    if (!material.constraint_mode()) {
        throw ConfigError("effective_drude: material violates the constant-anisotropy "
                          "constraint; only effective_eps(omega) is defined");
    }
    const double scale = effective_order(n, material.ar_inf()) / static_cast<double>(n);
    const DrudeModel& r = material.radial();
    return DrudeModel{r.eps_inf * scale, r.omega_p * std::sqrt(scale), r.gamma_p};
}

EffectiveMode effective_mode(const AnisotropicMaterial& material, int n) {
    return EffectiveMode{n, effective_order(n, material.ar_inf()),
                         effective_drude(material, n)};
}

} // namespace lspom
