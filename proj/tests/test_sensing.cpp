#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lspom/constants.hpp"
#include "lspom/errors.hpp"
#include "lspom/sensing.hpp"

using namespace lspom;

namespace {

const DrudeModel silver{6.0, 1.9e15, 0.012e15};

MechanicalMode ribbon() {
    return MechanicalMode::make(4.7e11, 1.9e9, 3e-22,
                                raman_si_from_volume_sq(1e3 * std::pow(angstrom, 4) / amu));
}

Scenario preset_scenario(double ar) {
    Scenario s;
    s.material = AnisotropicMaterial::from_radial_and_ar(silver, ar);
    s.geometry = Geometry::make(10e-9, 14e-9);
    s.mech = ribbon();
    s.drive.pump_intensity = 4e9;
    s.drive.probe_intensity = 1e7;
    s.drive.enhancement = 10.0;
    s.mode_n = 1;
    s.n_max = 4;
    s.grid_points = 2001;
    return s;
}

double lorentzian(double x, double center, double fwhm, double height, double base) {
    const double h = fwhm / 2.0;
    return base + height * h * h / ((x - center) * (x - center) + h * h);
}

} // namespace

TEST_CASE("find_peak certifies against an analytic Lorentzian") {
    // the certification window is wide so that the edge-sampled baseline is
    // exact to ~(fwhm / window)^2
    const double center = 4.7e11, fwhm = 1.9e9, height = 0.37, base = 1.0;
    const auto f = [&](double x) { return lorentzian(x, center, fwhm, height, base); };
    const Window w{center - 1000.0 * fwhm, center + 1000.0 * fwhm};
    const auto grid = linear_grid(w.lo, w.hi, 4001);
    const PeakStats stats = find_peak(f, w, grid);
    CHECK(std::abs(stats.fwhm - fwhm) < 1e-6 * fwhm);
    CHECK(std::abs(stats.center - center) < 1e-6 * center);
    CHECK(stats.height == doctest::Approx(base + height).epsilon(1e-9));
    CHECK(stats.baseline == doctest::Approx(base).epsilon(1e-3));
}

TEST_CASE("find_peak is translation invariant across disjoint windows") {
    const double fwhm = 1e9, height = 0.2, base = 0.5;
    const double c1 = 1e11, c2 = c1 + 10.0 * fwhm * 10.0;
    const auto f = [&](double x) {
        return lorentzian(x, c1, fwhm, height, base) +
               lorentzian(x, c2, fwhm, height, base) - base;
    };
    const Window w1{c1 - 15.0 * fwhm, c1 + 15.0 * fwhm};
    const Window w2{c2 - 15.0 * fwhm, c2 + 15.0 * fwhm};
    const auto g1 = linear_grid(w1.lo, w1.hi, 1001);
    const auto g2 = linear_grid(w2.lo, w2.hi, 1001);
    const PeakStats s1 = find_peak(f, w1, g1);
    const PeakStats s2 = find_peak(f, w2, g2);
    CHECK(std::abs((s1.center - c1) - (s2.center - c2)) < 1e-3 * fwhm);
    CHECK(std::abs(s1.fwhm - s2.fwhm) < 1e-6 * fwhm);
    CHECK(std::abs(s1.height - s2.height) < 1e-9);
}

TEST_CASE("find_peak error paths") {
    const auto rising = [](double x) { return x; };
    const Window w{0.0, 1.0};
    const auto grid = linear_grid(0.0, 1.0, 101);
    CHECK_THROWS_AS(find_peak(rising, w, grid), PeakNotFoundError);

    // peak so close to the edge that the right half-max crossing leaves the window
    const auto edge = [&](double x) { return lorentzian(x, 0.98, 0.2, 1.0, 0.0); };
    CHECK_THROWS_AS(find_peak(edge, w, grid), PeakTruncatedError);

    const auto fine = [&](double x) { return lorentzian(x, 0.5, 0.05, 1.0, 0.0); };
    const auto tiny_grid = linear_grid(0.0, 1.0, 10);
    CHECK_THROWS_AS(find_peak(fine, w, tiny_grid), DomainError);  // < 16 points
}

TEST_CASE("find_peak is grid robust (bisection, not interpolation)") {
    const double center = 4.7e11, fwhm = 1.9e9, height = 0.4, base = 1.0;
    const auto f = [&](double x) { return lorentzian(x, center, fwhm, height, base); };
    const Window w{center - 20.0 * fwhm, center + 20.0 * fwhm};
    const PeakStats coarse = find_peak(f, w, linear_grid(w.lo, w.hi, 501));
    const PeakStats fine = find_peak(f, w, linear_grid(w.lo, w.hi, 1001));
    CHECK(std::abs(coarse.fwhm - fine.fwhm) < 1e-3 * fine.fwhm);
}

TEST_CASE("mass resolution: formula, zero, linearity") {
    const MechanicalMode mech = ribbon();
    CHECK(mass_resolution(mech, 0.0) == 0.0);
    // the frozen paper-values evaluation
    CHECK(mass_resolution(mech, 0.18e9) ==
          doctest::Approx(2.29787234042553e-25).epsilon(1e-12));

    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int k = 0; k < 200; ++k) {
        const double m = u(rng) * 1e-22;
        const double wm = u(rng) * 1e11;
        const double dw = u(rng) * 1e9;
        const MechanicalMode mm = MechanicalMode::make(wm, 1e9, m, 1e-16);
        CHECK(mass_resolution(mm, 2.0 * dw) ==
              doctest::Approx(2.0 * mass_resolution(mm, dw)).epsilon(1e-14));
        CHECK(mass_resolution(mm, dw) ==
              doctest::Approx(2.0 * m * dw / wm).epsilon(1e-14));
    }
}

TEST_CASE("mass resolution: paper value is flagged as discrepant") {
    const FlaggedValue v =
        flag_against_reported(mass_resolution(ribbon(), 0.18e9), 1.2e-24);
    CHECK(v.paper_discrepancy);
    CHECK(v.computed == doctest::Approx(2.29787234042553e-25).epsilon(1e-12));
    CHECK(*v.reported == 1.2e-24);
}

TEST_CASE("casimir force: magnitude, power law, discrepancy flag") {
    const double f = casimir_force(10e-9, 3e-9);
    CHECK(f < 0.0);  // attractive
    CHECK(std::abs(f) == doctest::Approx(1.00851001863324e-9).epsilon(1e-10));
    // within 1% of the quoted 1.01e-9 N
    CHECK(std::abs(std::abs(f) - 1.01e-9) < 0.01 * 1.01e-9);
    // h^-3: halving the gap multiplies by 8
    CHECK(casimir_force(10e-9, 1.5e-9) / f == doctest::Approx(8.0).epsilon(1e-12));
    // distant plate: force vanishes
    CHECK(std::abs(casimir_force(10e-9, 1.0)) < 1e-33);
    const FlaggedValue v = flag_against_reported(std::abs(f), 9e-27);
    CHECK(v.paper_discrepancy);
}

TEST_CASE("flag_against_reported: 10% policy") {
    CHECK_FALSE(flag_against_reported(1.0, 1.05).paper_discrepancy);
    CHECK(flag_against_reported(1.0, 1.2).paper_discrepancy);
    CHECK_FALSE(flag_against_reported(1.0, std::nullopt).paper_discrepancy);
}

TEST_CASE("single-value sweep equals a direct scenario run field-for-field") {
    const Scenario base = preset_scenario(0.01);
    SweepSpec spec{SweepAxis::r_m, {14e-9}, base};
    const auto rows = run_sweep(spec);
    const auto direct = run_scenario_rows(base, 14e-9);
    REQUIRE(rows.size() == direct.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].n == direct[k].n);
        CHECK(rows[k].mode.omega_n == direct[k].mode.omega_n);
        CHECK(rows[k].mode.g_op == direct[k].mode.g_op);
        REQUIRE(rows[k].peak.has_value() == direct[k].peak.has_value());
        if (rows[k].peak) {
            CHECK(rows[k].peak->center == direct[k].peak->center);
            CHECK(rows[k].peak->fwhm == direct[k].peak->fwhm);
            CHECK(*rows[k].delta_m == *direct[k].delta_m);
        }
    }
}

TEST_CASE("sweeps are deterministic") {
    const Scenario base = preset_scenario(0.002);
    SweepSpec spec{SweepAxis::r_m, {20e-9, 17e-9, 14e-9}, base};
    const auto a = run_sweep(spec);
    const auto b = run_sweep(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].mode.g_op == b[k].mode.g_op);
        if (a[k].peak) {
            CHECK(a[k].peak->height == b[k].peak->height);
            CHECK(a[k].peak->fwhm == b[k].peak->fwhm);
        }
    }
}

TEST_CASE("distance sweep reproduces the approach enhancement") {
    // decreasing r_m raises the dipole peak at AR = 0.002
    const Scenario base = preset_scenario(0.002);
    SweepSpec spec{SweepAxis::r_m, {20e-9, 17e-9, 14e-9, 12e-9}, base};
    const auto rows = run_sweep(spec);
    double prev = 0.0;
    for (const auto& row : rows) {
        if (row.n != 1) continue;
        REQUIRE(row.peak.has_value());
        CHECK(row.peak->height > prev);
        prev = row.peak->height;
    }
}

TEST_CASE("sweep records row-level failures and continues") {
    Scenario base = preset_scenario(0.01);
    SweepSpec spec{SweepAxis::pump_intensity, {0.0, 4e9}, base};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 2 * static_cast<std::size_t>(base.n_max));
    for (const auto& row : rows) {
        if (row.axis_value == 0.0) {
            // pump off: |t|^2 is flat 1, no peak to find
            CHECK_FALSE(row.error.empty());
            CHECK_FALSE(row.peak.has_value());
        } else {
            CHECK(row.error.empty());
            CHECK(row.peak.has_value());
        }
    }
}

TEST_CASE("sweep validation") {
    const Scenario base = preset_scenario(0.01);
    CHECK_THROWS_AS(run_sweep(SweepSpec{SweepAxis::r_m, {}, base}), ConfigError);
    CHECK_THROWS_AS(run_sweep(SweepSpec{SweepAxis::r_m, {1e-9, 1e-9}, base}), ConfigError);
    CHECK_THROWS_AS(run_sweep(SweepSpec{SweepAxis::r_m, {1e-8, 3e-8, 2e-8}, base}),
                    ConfigError);
    CHECK_THROWS_AS(apply_axis(base, SweepAxis::mode_n, 1.5), ConfigError);
}

TEST_CASE("mode sweep returns one row per requested order") {
    const Scenario base = preset_scenario(0.002);
    SweepSpec spec{SweepAxis::mode_n, {1.0, 2.0, 3.0}, base};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 3);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].n == static_cast<int>(k) + 1);
    }
}
