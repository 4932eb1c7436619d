#include "lspom/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lspom/constants.hpp"
#include "lspom/errors.hpp"

namespace lspom {

namespace {

// Median of the outermost ~10% of window samples (split across both edges).
double edge_baseline(const std::function<double(double)>& f, Window w, int grid_points) {
    const int per_side = std::max(2, grid_points / 20);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(2 * per_side));
    const double step = (w.hi - w.lo) / (grid_points - 1);
    for (int k = 0; k < per_side; ++k) {
        vals.push_back(f(w.lo + step * k));
        vals.push_back(f(w.hi - step * k));
    }
    std::sort(vals.begin(), vals.end());
    const std::size_t m = vals.size() / 2;
    return vals.size() % 2 == 1 ? vals[m] : 0.5 * (vals[m - 1] + vals[m]);
}

// Bisection for f(x) == level on [a, b] with f(a) - level and f(b) - level of
// opposite signs.
double bisect_level(const std::function<double(double)>& f, double level, double a,
                    double b) {
    double fa = f(a) - level;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid) - level;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if (std::abs(b - a) <= 1e-14 * std::max(std::abs(a), std::abs(b))) break;
    }
    return 0.5 * (a + b);
}

} // namespace

PeakStats find_peak(const std::function<double(double)>& response, Window window,
                    std::span<const double> seed_grid) {
    if (!(window.hi > window.lo)) throw DomainError("find_peak: empty window");

    // coarse argmax over the in-window seed points
    std::vector<double> xs;
    std::vector<double> ys;
    for (double x : seed_grid) {
        if (x >= window.lo && x <= window.hi) {
            xs.push_back(x);
            ys.push_back(response(x));
        }
    }
    if (xs.size() < 16) {
        throw DomainError("find_peak: need at least 16 grid points inside the window");
    }
    std::size_t imax = 0;
    for (std::size_t k = 1; k < xs.size(); ++k) {
        if (ys[k] > ys[imax]) imax = k;
    }
    if (imax == 0 || imax + 1 == xs.size()) {
        // no interior maximum: monotone data or a peak cut by the window edge
        throw PeakNotFoundError("find_peak: no interior maximum in window");
    }

    // local quadratic refinement of the center
    const double x0 = xs[imax - 1], x1 = xs[imax], x2 = xs[imax + 1];
    const double y0 = ys[imax - 1], y1 = ys[imax], y2 = ys[imax + 1];
    double center = x1;
    const double curv = y0 - 2.0 * y1 + y2;
    if (curv < 0.0) {
        center = x1 - 0.5 * (x2 - x0) / 2.0 * (y2 - y0) / curv;
        center = std::clamp(center, x0, x2);
    }
    // golden-section polish on the continuous response
    {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = x0, b = x2;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = response(c1), f2 = response(c2);
        for (int it = 0; it < 120 && (b - a) > 1e-15 * std::abs(b); ++it) {
            if (f1 < f2) {
                a = c1;
                c1 = c2;
                f1 = f2;
                c2 = a + gr * (b - a);
                f2 = response(c2);
            } else {
                b = c2;
                c2 = c1;
                f2 = f1;
                c1 = b - gr * (b - a);
                f1 = response(c1);
            }
        }
        center = 0.5 * (a + b);
    }

    PeakStats stats;
    stats.center = center;
    stats.height = response(center);
    stats.baseline = edge_baseline(response, window, static_cast<int>(xs.size()));
    // require genuine prominence; flat data "peaks" only through rounding noise
    const double floor = 1e-10 * (std::abs(stats.height) + std::abs(stats.baseline));
    if (!(stats.height > stats.baseline + floor)) {
        throw PeakNotFoundError("find_peak: no peak above baseline in window");
    }
    const double level = stats.baseline + 0.5 * (stats.height - stats.baseline);

    // half-max crossings by bisection on the continuous response; walk outward
    // from the center to bracket each crossing
    const double step = (window.hi - window.lo) / static_cast<double>(xs.size() - 1);
    const auto crossing = [&](int dir) {
        double inner = center;
        double outer = center + dir * step;
        const double limit = dir > 0 ? window.hi : window.lo;
        while ((dir > 0 ? outer < limit : outer > limit) && response(outer) > level) {
            inner = outer;
            outer += dir * step;
        }
        outer = dir > 0 ? std::min(outer, limit) : std::max(outer, limit);
        if (response(outer) > level) {
            throw PeakTruncatedError("find_peak: half-maximum crossing outside window "
                                     "(peak truncated)");
        }
        return bisect_level(response, level, inner, outer);
    };
    const double right = crossing(+1);
    const double left = crossing(-1);
    stats.fwhm = right - left;
    return stats;
}

PeakStats find_peak(const ProbeSpectrum& spectrum, Window window) {
    const auto f = [&](double d) { return spectrum.model.t_sq(d); };
    return find_peak(f, window, spectrum.delta);
}

double mass_resolution(const MechanicalMode& mech, double fwhm) {
    if (fwhm < 0.0) throw DomainError("mass_resolution: fwhm must be >= 0");
    return 2.0 * mech.mass * fwhm / mech.omega_m;
}

double casimir_force(double radius, double gap) {
    if (!(radius > 0.0) || !(gap > 0.0)) {
        throw DomainError("casimir_force: radius and gap must be positive");
    }
    const double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
    return -pi3 * hbar * c_light * radius / (360.0 * gap * gap * gap);
}

FlaggedValue flag_against_reported(double computed, std::optional<double> reported) {
    FlaggedValue v;
    v.computed = computed;
    v.reported = reported;
    if (reported && *reported != 0.0) {
        v.paper_discrepancy = std::abs(computed - *reported) > 0.10 * std::abs(*reported);
    }
    return v;
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::ar_inf: return "AR_inf";
        case SweepAxis::r_m: return "r_m";
        case SweepAxis::mode_n: return "n";
        case SweepAxis::pump_intensity: return "pump_intensity";
        case SweepAxis::radius: return "R";
    }
    return "?";
}

Scenario apply_axis(const Scenario& base, SweepAxis axis, double value) {
    Scenario s = base;
    switch (axis) {
        case SweepAxis::ar_inf:
            s.material = AnisotropicMaterial::from_radial_and_ar(base.material.radial(), value);
            break;
        case SweepAxis::r_m:
            s.geometry = Geometry::make(base.geometry.radius, value);
            break;
        case SweepAxis::mode_n:
            s.mode_n = static_cast<int>(value);
            if (s.mode_n < 1 || static_cast<double>(s.mode_n) != value) {
                throw ConfigError("sweep: mode index values must be positive integers");
            }
            s.n_max = std::max(s.n_max, s.mode_n);
            break;
        case SweepAxis::pump_intensity:
            if (value < 0.0) throw ConfigError("sweep: pump intensity must be >= 0");
            s.drive.pump_intensity = value;
            s.drive.omega_pu_override.reset();
            break;
        case SweepAxis::radius:
            s.geometry = Geometry::make(value, base.geometry.distance);
            break;
    }
    return s;
}

Window scenario_window(const Scenario& scenario) {
    const double half = scenario.window_halfwidth > 0.0
                            ? scenario.window_halfwidth
                            : 25.0 * scenario.mech.gamma_m;
    // The pump amplifies the probe on its Stokes side: the analyzable peak
    // sits at delta = -omega_m (the +omega_m twin is a dip of equal size).
    const double center = scenario.window_center.value_or(-scenario.mech.omega_m);
    return Window{center - half, center + half};
}

std::vector<SweepRow> run_scenario_rows(const Scenario& scenario, double axis_value) {
    std::vector<SweepRow> rows;
    const auto catalog =
        mode_catalog(scenario.material, scenario.geometry, scenario.mech, scenario.n_max);
    const Window w = scenario_window(scenario);
    for (const PlasmonMode& mode : catalog) {
        SweepRow row;
        row.axis_value = axis_value;
        row.n = mode.n;
        row.mode = mode;
        try {
            DriveConfig drive = scenario.drive;
            drive.delta_grid = linear_grid(w.lo, w.hi, scenario.grid_points);
            const ProbeSpectrum sp =
                transmission_spectrum(mode, scenario.mech, drive);
            row.peak = find_peak(sp, w);
            row.delta_m = mass_resolution(scenario.mech, row.peak->fwhm);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.values.empty()) throw ConfigError("run_sweep: empty value list");
    const bool increasing = spec.values.size() < 2 || spec.values[1] > spec.values[0];
    for (std::size_t k = 1; k < spec.values.size(); ++k) {
        const bool step_up = spec.values[k] > spec.values[k - 1];
        if (step_up != increasing || spec.values[k] == spec.values[k - 1]) {
            throw ConfigError("run_sweep: values must be strictly monotone");
        }
    }
    std::vector<SweepRow> rows;
    for (double v : spec.values) {
        const Scenario s = apply_axis(spec.base, spec.axis, v);
        if (spec.axis == SweepAxis::mode_n) {
            // a mode sweep evaluates only the selected mode per value
            Scenario single = s;
            auto all = run_scenario_rows(single, v);
            for (auto& row : all) {
                if (row.n == s.mode_n) rows.push_back(std::move(row));
            }
        } else {
            auto all = run_scenario_rows(s, v);
            rows.insert(rows.end(), std::make_move_iterator(all.begin()),
                        std::make_move_iterator(all.end()));
        }
    }
    return rows;
}

} // namespace lspom
