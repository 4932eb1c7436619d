#include "lspom/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lspom/constants.hpp"
#include "lspom/errors.hpp"

namespace lspom {

namespace {

using std::complex;

// Real roots of a*u^3 + b*u^2 + c*u + d (a != 0), Newton-polished.
std::vector<double> cubic_real_roots(double a, double b, double c, double d) {
    const auto poly = [&](double x) { return ((a * x + b) * x + c) * x + d; };
    const auto dpoly = [&](double x) { return (3.0 * a * x + 2.0 * b) * x + c; };

    std::vector<double> roots;
    const double bn = b / a, cn = c / a, dn = d / a;
    const double p = cn - bn * bn / 3.0;
    const double q = 2.0 * bn * bn * bn / 27.0 - bn * cn / 3.0 + dn;
    const double shift = -bn / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        roots.push_back(shift + std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s));
    } else {
        // three real roots, trigonometric form
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(shift + m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
        }
    }
    for (double& x : roots) {
        for (int it = 0; it < 6; ++it) {
            const double df = dpoly(x);
            if (df == 0.0) break;
            const double step = poly(x) / df;
            x -= step;
            if (std::abs(step) <= 1e-16 * std::abs(x)) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

double drive_coupling(const PlasmonMode& mode, double intensity, double enhancement) {
    if (intensity < 0.0) throw DomainError("drive_coupling: intensity must be >= 0");
    if (enhancement < 1.0) throw DomainError("drive_coupling: enhancement must be >= 1");
    const double e_inc = std::sqrt(2.0 * intensity / (eps0 * c_light));
    const double e_m = enhancement * e_inc;
    return mode.kappa * std::sqrt(eps0 * mode.mode_volume / (2.0 * hbar * mode.omega_n)) *
           e_m / 2.0;
}

ResolvedDrive resolve_drive(const PlasmonMode& mode, const MechanicalMode& mech,
                            const DriveConfig& drive) {
    ResolvedDrive out;
    if (drive.pump_detuning) {
        out.delta_pump = *drive.pump_detuning;
    } else if (drive.omega_pump) {
        out.delta_pump = mode.omega_n - *drive.omega_pump;
    } else {
        out.delta_pump = mech.omega_m;
    }
    if (drive.omega_pu_override) {
        out.omega_pu = *drive.omega_pu_override;
    } else if (drive.pump_intensity) {
        out.omega_pu = drive_coupling(mode, *drive.pump_intensity, drive.enhancement);
    } else {
        throw ConfigError("resolve_drive: pump requires an intensity or a rate override");
    }
    if (drive.omega_pr_override) {
        out.omega_pr = *drive.omega_pr_override;
    } else if (drive.probe_intensity) {
        out.omega_pr = drive_coupling(mode, *drive.probe_intensity, drive.enhancement);
    } else {
        throw ConfigError("resolve_drive: probe requires an intensity or a rate override");
    }
    if (!(out.omega_pr > 0.0)) {
        throw ConfigError("resolve_drive: probe rate must be positive");
    }
    out.weak_probe_ok = out.omega_pu <= 0.0 || out.omega_pr / out.omega_pu < 0.1;
    return out;
}

SteadyState steady_state(const PlasmonMode& mode, const MechanicalMode& mech,
                         double delta_pump, double omega_pu) {
    if (!(mode.kappa > 0.0)) throw DomainError("steady_state: kappa must be positive");
    if (omega_pu < 0.0) throw DomainError("steady_state: Omega_pu must be >= 0");

    SteadyState ss;
    ss.omega_pu = omega_pu;
    if (omega_pu == 0.0) {
        ss.all_roots = {0.0};
        return ss;
    }

    const double g = mode.g_op;
    const double kap = mode.kappa;
    const double beta = 2.0 * g * g / mech.omega_m;  // detuning shift per photon
    const double pump_sq = omega_pu * omega_pu;
    const double s_sq = delta_pump * delta_pump + kap * kap;
    const double w0_lin = pump_sq / s_sq;

    const auto f = [&](double u) {
        const double de = delta_pump - beta * u;
        return u * (de * de + kap * kap) - pump_sq;
    };
    const auto df = [&](double u) {
        const double de = delta_pump - beta * u;
        return de * de + kap * kap - 2.0 * beta * u * de;
    };

    const double back_action = beta * w0_lin / std::sqrt(s_sq);
    if (back_action < 1e-10) {
        // back-action negligible: Newton from the linear-cavity root
        double u = w0_lin;
        for (int it = 0; it < 8; ++it) {
            const double d = df(u);
            if (d == 0.0) break;
            const double step = f(u) / d;
            u -= step;
            if (std::abs(step) <= 1e-16 * std::abs(u)) break;
        }
        ss.all_roots = {u};
        ss.omega0 = u;
    } else {
        // normalized cubic in u = omega0 / w0_lin keeps coefficients O(1)
        const double bb = beta * w0_lin;
        auto roots_u = cubic_real_roots(bb * bb / s_sq, -2.0 * delta_pump * bb / s_sq,
                                        1.0, -1.0);
        std::vector<double> admissible;
        for (double u : roots_u) {
            double w0 = u * w0_lin;
            for (int it = 0; it < 8; ++it) {
                const double d = df(w0);
                if (d == 0.0) break;
                const double step = f(w0) / d;
                w0 -= step;
                if (std::abs(step) <= 1e-16 * std::abs(w0)) break;
            }
            if (w0 < 0.0 && w0 > -1e-12 * w0_lin) w0 = 0.0;
            if (w0 >= 0.0 && std::abs(f(w0)) <= 1e-6 * pump_sq) admissible.push_back(w0);
        }
        std::sort(admissible.begin(), admissible.end());
        admissible.erase(std::unique(admissible.begin(), admissible.end(),
                                     [](double a, double b) {
                                         return std::abs(a - b) <=
                                                1e-8 * std::max(std::abs(a), std::abs(b));
                                     }),
                         admissible.end());
        if (admissible.empty()) {
            throw NumericalError("steady_state: cubic produced no admissible root");
        }
        ss.all_roots = admissible;
        ss.multistable = admissible.size() > 1;
        ss.omega0 = admissible.front();
    }

    ss.n0 = 2.0 * g * ss.omega0 / mech.omega_m;
    ss.a0 = omega_pu / (complex<double>(0.0, 1.0) * (delta_pump - g * ss.n0) + kap);
    return ss;
}

ProbeResponse probe_amplitude(const PlasmonMode& mode, const MechanicalMode& mech,
                              const SteadyState& ss, double delta_pump, double delta,
                              double omega_pr) {
    if (!(omega_pr > 0.0)) throw DomainError("probe_amplitude: Omega_pr must be positive");
    const complex<double> i(0.0, 1.0);
    const double g = mode.g_op;
    const double wm = mech.omega_m;

    ProbeResponse r;
    // Mechanical susceptibility denominator; resonant near |delta| = omega_m.
    r.w = -(delta * delta + i * mech.gamma_m * delta - wm * wm);
    r.z = 2.0 * i * wm * ss.omega0 * g * g;
    r.y = i * (delta_pump - ss.n0 * g);
    r.x = complex<double>(mode.kappa, -delta);

    if (r.z == complex<double>(0.0, 0.0)) {
        // undriven mechanics: bare-cavity response, exact limit of the full form
        r.a_plus = omega_pr / (r.x + r.y);
        r.a_minus = complex<double>(0.0, 0.0);
    } else {
        const complex<double> mech_den = r.w * (r.x - r.y) + r.z;
        const complex<double> denom = r.w * (r.x * r.x - r.y * r.y) + 2.0 * r.y * r.z;
        const double scale = std::abs(r.w) * (std::norm(r.x) + std::norm(r.y)) +
                             2.0 * std::abs(r.y) * std::abs(r.z);
        if (std::abs(denom) < 1e-14 * scale || denom == complex<double>(0.0, 0.0)) {
            throw NumericalError("probe_amplitude: response pole at delta = " +
                                 std::to_string(delta));
        }
        r.a_plus = omega_pr * mech_den / denom;
        // idler sideband from the conjugate-frequency equation
        const complex<double> n_plus =
            2.0 * wm * g * std::conj(ss.a0) * r.a_plus * (r.x - r.y) / mech_den;
        const complex<double> x_conj(mode.kappa, delta);
        r.a_minus = i * ss.a0 * g * std::conj(n_plus) / (x_conj + r.y);
    }

    r.t = 1.0 - 2.0 * mode.kappa * r.a_plus / omega_pr;
    r.transmission_rate = std::norm(r.t);
    const double ref = std::abs(ss.a0) * ss.omega_pu;
    r.perturbative_ratio = ref > 0.0
                               ? std::abs(r.a_plus) * omega_pr / ref
                               : std::numeric_limits<double>::infinity();
    return r;
}

std::complex<double> ResponseModel::t(double delta) const {
    return probe_amplitude(mode, mech, steady, delta_pump, delta, omega_pr).t;
}

double ResponseModel::t_sq(double delta) const {
    return probe_amplitude(mode, mech, steady, delta_pump, delta, omega_pr)
        .transmission_rate;
}

ProbeSpectrum transmission_spectrum(const PlasmonMode& mode, const MechanicalMode& mech,
                                    const DriveConfig& drive) {
    if (drive.delta_grid.empty()) {
        throw ConfigError("transmission_spectrum: empty detuning grid");
    }
    for (std::size_t k = 1; k < drive.delta_grid.size(); ++k) {
        if (!(drive.delta_grid[k] > drive.delta_grid[k - 1])) {
            throw ConfigError("transmission_spectrum: grid must be strictly increasing");
        }
    }
    const ResolvedDrive rd = resolve_drive(mode, mech, drive);
    const SteadyState ss = steady_state(mode, mech, rd.delta_pump, rd.omega_pu);

    ProbeSpectrum sp;
    sp.model = ResponseModel{mode, mech, ss, rd.delta_pump, rd.omega_pr};
    sp.delta = drive.delta_grid;
    sp.t.reserve(sp.delta.size());
    sp.t_sq.reserve(sp.delta.size());
    sp.flags.reserve(sp.delta.size());
    for (double d : sp.delta) {
        try {
            const ProbeResponse pr =
                probe_amplitude(mode, mech, ss, rd.delta_pump, d, rd.omega_pr);
            sp.t.push_back(pr.t);
            sp.t_sq.push_back(pr.transmission_rate);
            sp.flags.push_back(rd.weak_probe_ok ? PointFlag::ok : PointFlag::perturbative);
        } catch (const NumericalError&) {
            sp.t.push_back(std::complex<double>(std::nan(""), std::nan("")));
            sp.t_sq.push_back(std::nan(""));
            sp.flags.push_back(PointFlag::pole);
        }
    }
    return sp;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 2 || !(hi > lo)) throw ConfigError("linear_grid: bad grid request");
    std::vector<double> g(static_cast<std::size_t>(points));
    const double step = (hi - lo) / (points - 1);
    for (int k = 0; k < points; ++k) g[static_cast<std::size_t>(k)] = lo + step * k;
    return g;
}

} // namespace lspom
