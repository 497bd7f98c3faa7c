#pragma once

#include <stdexcept>
#include <string>

namespace blockade {

/// Conversion requested between units of different physical dimension.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad run configuration (CLI exit code 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to converge (CLI exit code 3).
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Potential evaluated to a non-finite value on a grid point.
struct SingularPotential : std::domain_error {
    using std::domain_error::domain_error;
};

/// Bose reservoir beyond the thermal-gas domain: n Lambda^3 > zeta(3/2).
struct CondensedReservoir : std::domain_error {
    double psd;
    double psd_max;
    CondensedReservoir(double rho, double rho_max)
        : std::domain_error("reservoir is condensed: phase-space density " + std::to_string(rho) +
                            " exceeds zeta(3/2) = " + std::to_string(rho_max)),
          psd(rho), psd_max(rho_max) {}
};

/// No depth in the scan satisfies the blockade constraint 2*eps > U > eps.
struct NoBlockadeWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace blockade
