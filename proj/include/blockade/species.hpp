#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockade/constants.hpp"

namespace blockade {

/// A shielded molecular species.  The repulsive shield is the effective
/// +c6/r^6 potential, characterized by R6 = (m c6 / hbar^2)^(1/4).  R6 and
/// c6 are stored redundantly and kept consistent.
struct Species {
    std::string name;
    double mass = 0;         // kg
    double r6 = 0;           // m
    double c6 = 0;           // J m^6
    double dipole_debye = 0; // metadata only; no equation consumes it

    static Species from_r6(std::string name, double mass, double r6, double dipole_debye = 0) {
        if (mass <= 0) throw std::invalid_argument("species mass must be positive");
        if (r6 <= 0) throw std::invalid_argument("species R6 must be positive");
        Species s;
        s.name = std::move(name);
        s.mass = mass;
        s.r6 = r6;
        // invert R6 = (m c6 / hbar^2)^(1/4)
        const double r6_sq = r6 * r6;
        s.c6 = constants::hbar * constants::hbar * r6_sq * r6_sq / mass;
        s.dipole_debye = dipole_debye;
        return s;
    }

    static Species from_c6(std::string name, double mass, double c6, double dipole_debye = 0) {
        if (mass <= 0) throw std::invalid_argument("species mass must be positive");
        if (c6 <= 0) throw std::invalid_argument("species c6 must be positive");
        Species s;
        s.name = std::move(name);
        s.mass = mass;
        s.c6 = c6;
        s.r6 = std::pow(mass * c6 / (constants::hbar * constants::hbar), 0.25);
        s.dipole_debye = dipole_debye;
        return s;
    }
};

/// Shield energy scale E6 = hbar^2 / (2 m R6^2).
inline double characteristic_energy(const Species& s) {
    return constants::hbar * constants::hbar / (2.0 * s.mass * s.r6 * s.r6);
}

/// An isotropic Gaussian tweezer V(r1) = -D exp(-2 r1^2 / w0^2).
struct TweezerConfig {
    double waist = 0; // w0, m
    double depth = 0; // D, J

    TweezerConfig() = default;
    TweezerConfig(double w0, double D) : waist(w0), depth(D) {
        if (w0 <= 0) throw std::invalid_argument("tweezer waist must be positive");
        if (D < 0) throw std::invalid_argument("tweezer depth must be non-negative");
    }
};

/// Reference species.  Isotopes: 23Na133Cs, 39K107Ag, 223Fr107Ag; masses are
/// sums of the standard isotope masses (AME2020).  Shield ranges follow the
/// universal scaling of double microwave shielding.
inline std::vector<Species> builtin_species() {
    using constants::atomic_mass_unit;
    using constants::bohr_radius;
    constexpr double m_na23 = 22.9897692820;
    constexpr double m_cs133 = 132.9054519610;
    constexpr double m_k39 = 38.9637064864;
    constexpr double m_ag107 = 106.9050916;
    constexpr double m_fr223 = 223.0197360;
    return {
        Species::from_r6("NaCs", (m_na23 + m_cs133) * atomic_mass_unit, 3000.0 * bohr_radius, 4.6),
        Species::from_r6("KAg", (m_k39 + m_ag107) * atomic_mass_unit, 9000.0 * bohr_radius, 8.5),
        Species::from_r6("FrAg", (m_fr223 + m_ag107) * atomic_mass_unit, 14000.0 * bohr_radius, 9.2),
    };
}

inline Species find_species(const std::string& name) {
    for (auto& s : builtin_species())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown species: " + name);
}

} // namespace blockade
