#pragma once

namespace lspom {

// Physical constants (SI, CODATA 2018).
inline constexpr double c_light  = 299792458.0;        // m/s
inline constexpr double hbar     = 1.054571817e-34;    // J s
inline constexpr double eps0     = 8.8541878128e-12;   // F/m
inline constexpr double amu      = 1.66053906660e-27;  // kg
inline constexpr double angstrom = 1e-10;              // m

} // namespace lspom
