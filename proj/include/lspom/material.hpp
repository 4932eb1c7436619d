#pragma once

#include <complex>

namespace lspom {

using Complex = std::complex<double>;

/// Free-electron (Drude) dispersion: eps(w) = eps_inf - wp^2 / (w (w + i*gp)).
/// All frequencies are angular (rad/s).
struct DrudeModel {
    double eps_inf = 1.0;   // high-frequency permittivity limit
    double omega_p = 0.0;   // bulk plasma frequency, rad/s
    double gamma_p = 0.0;   // collision damping rate, rad/s

    /// Complex relative permittivity at angular frequency omega > 0.
    Complex eps(double omega) const;
};

/// Evaluate the Drude permittivity. Throws DomainError for omega <= 0.
Complex drude_eps(const DrudeModel& model, double omega);

/// Radially anisotropic material: independent Drude models for the radial
/// and tangential permittivity components.
///
/// Constraint mode means the two components satisfy
///   omega_pt^2 / eps_inf_t == omega_pr^2 / eps_inf_r   and   gamma_pt == gamma_pr,
/// which makes the anisotropy ratio eps_t(w)/eps_r(w) frequency independent.
class AnisotropicMaterial {
public:
    /// Build from a radial component plus the high-frequency anisotropy
    /// ratio AR_inf = eps_inf_t / eps_inf_r. Enforces the constraint exactly.
    static AnisotropicMaterial from_radial_and_ar(const DrudeModel& radial, double ar_inf);

    /// Build from explicit components. Accepted even when the constraint does
    /// not hold; effective_drude() then refuses.
    static AnisotropicMaterial from_components(const DrudeModel& radial,
                                               const DrudeModel& tangential);

    /// Isotropic material (tangential == radial, AR_inf == 1).
    static AnisotropicMaterial isotropic(const DrudeModel& model);

    const DrudeModel& radial() const { return radial_; }
    const DrudeModel& tangential() const { return tangential_; }

    /// High-frequency anisotropy ratio eps_inf_t / eps_inf_r.
    double ar_inf() const { return ar_inf_; }

    /// True when the parameter constraint holds (within 1e-12 relative on the
    /// plasma-frequency relation, exact on the damping rates).
    bool constraint_mode() const { return constraint_mode_; }

    /// eps_t(w) / eps_r(w). Equals ar_inf() at every frequency in constraint mode.
    Complex anisotropy_ratio(double omega) const;

private:
    AnisotropicMaterial() = default;
    DrudeModel radial_;
    DrudeModel tangential_;
    double ar_inf_ = 1.0;
    bool constraint_mode_ = false;
};

/// Non-integer angular order replacing n inside a radially anisotropic sphere:
/// nu = sqrt(n(n+1) AR + 1/4) - 1/2. Requires n >= 1 and AR > 0.
double effective_order(int n, double ar);

/// Same expression continued to complex anisotropy ratios (principal root).
Complex effective_order_c(int n, Complex ar);

/// Effective permittivity of the equivalent isotropic sphere for multipole n:
/// eps_eff = (nu/n) * eps_r(w), with nu from the (generally complex)
/// anisotropy ratio at w. In constraint mode nu is real and frequency
/// independent.
Complex effective_eps(const AnisotropicMaterial& material, int n, double omega);

/// Effective Drude parameters for multipole n (constraint mode only):
/// omega_p_eff = sqrt(nu/n) * omega_pr, eps_inf_eff = (nu/n) * eps_inf_r,
/// gamma unchanged. Throws ConfigError outside constraint mode.
DrudeModel effective_drude(const AnisotropicMaterial& material, int n);

/// Bundle of the effective-sphere parameters for one multipole order.
struct EffectiveMode {
    int n = 1;             // multipole index
    double nu = 1.0;       // effective (non-integer) order
    DrudeModel drude_eff;  // effective Drude parameters
};

/// Convenience accessor combining effective_order and effective_drude.
EffectiveMode effective_mode(const AnisotropicMaterial& material, int n);

} // namespace lspom
