#pragma once

#include <numbers>

namespace blockade::constants {

// SI defining constants (exact since the 2019 redefinition) and CODATA 2018
// measured values.  Everything downstream works in SI (J, m, kg, s); unit
// conversions happen only at the interface layer.

inline constexpr double pi = std::numbers::pi;

/// Planck constant [J s] (exact).
inline constexpr double h = 6.62607015e-34;

/// Reduced Planck constant [J s]; stored as h / 2pi exactly.
inline constexpr double hbar = h / (2.0 * pi);

/// Boltzmann constant [J/K] (exact).
inline constexpr double k_B = 1.380649e-23;

/// Bohr radius [m].
inline constexpr double bohr_radius = 5.29177210903e-11;

/// Atomic mass unit [kg].
inline constexpr double atomic_mass_unit = 1.66053906660e-27;

} // namespace blockade::constants
