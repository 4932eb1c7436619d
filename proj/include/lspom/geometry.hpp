#pragma once

namespace lspom {

// Distances below which nonlocal dielectric response matters; results are
// outside the model's validity there and get flagged, not rejected.
inline constexpr double nonlocal_distance_limit = 11e-9;  // m

/// Sphere radius and nanoribbon center distance, both in meters.
struct Geometry {
    double radius = 0.0;    // sphere radius R, m
    double distance = 0.0;  // nanoribbon distance r_m from sphere center, m

    /// Validated constructor: requires distance > radius > 0.
    static Geometry make(double radius, double distance);

    /// True when the nanoribbon sits closer than the nonlocal-validity limit.
    bool nonlocal_warning() const { return distance < nonlocal_distance_limit; }
};

} // namespace lspom
