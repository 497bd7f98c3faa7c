#pragma once

#include <array>
#include <string_view>

#include "blockade/constants.hpp"
#include "blockade/errors.hpp"

namespace blockade {

enum class Unit {
    joule,       // J
    h_kHz,       // energy as h * 1 kHz
    h_Hz,        // energy as h * 1 Hz
    kB_nK,       // energy as k_B * 1 nK
    kB_uK,       // energy as k_B * 1 uK
    metre,       // m
    nanometre,   // nm
    bohr,        // a0
    amu,         // u
    kilogram,    // kg
    per_cm3,     // cm^-3
    per_m3,      // m^-3
    debye,       // D (dipole moments are metadata; no second dipole unit)
};

enum class Dimension { energy, length, mass, number_density, dipole };

namespace detail {

struct UnitInfo {
    Unit unit;
    Dimension dim;
    double to_si; // value_in_SI = value * to_si
    std::string_view name;
};

inline constexpr std::array<UnitInfo, 13> unit_table{{
    {Unit::joule, Dimension::energy, 1.0, "J"},
    {Unit::h_kHz, Dimension::energy, constants::h * 1e3, "h.kHz"},
    {Unit::h_Hz, Dimension::energy, constants::h, "h.Hz"},
    {Unit::kB_nK, Dimension::energy, constants::k_B * 1e-9, "kB.nK"},
    {Unit::kB_uK, Dimension::energy, constants::k_B * 1e-6, "kB.uK"},
    {Unit::metre, Dimension::length, 1.0, "m"},
    {Unit::nanometre, Dimension::length, 1e-9, "nm"},
    {Unit::bohr, Dimension::length, constants::bohr_radius, "a0"},
    {Unit::amu, Dimension::mass, constants::atomic_mass_unit, "u"},
    {Unit::kilogram, Dimension::mass, 1.0, "kg"},
    {Unit::per_cm3, Dimension::number_density, 1e6, "cm^-3"},
    {Unit::per_m3, Dimension::number_density, 1.0, "m^-3"},
    {Unit::debye, Dimension::dipole, 1.0, "D"},
}};

inline constexpr const UnitInfo& info(Unit u) {
    return unit_table[static_cast<std::size_t>(u)];
}

} // namespace detail

inline constexpr Dimension dimension_of(Unit u) { return detail::info(u).dim; }

inline constexpr std::string_view unit_name(Unit u) { return detail::info(u).name; }

/// Exact linear conversion between compatible units.
inline double convert(double value, Unit from, Unit to) {
    const auto& a = detail::info(from);
    const auto& b = detail::info(to);
    if (a.dim != b.dim)
        throw DimensionMismatch(std::string("cannot convert ") + std::string(a.name) + " to " +
                                std::string(b.name));
    if (from == to) return value;
    return value * (a.to_si / b.to_si);
}

} // namespace blockade
