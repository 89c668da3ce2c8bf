#pragma once

namespace stirling {

/// Fundamental constants in SI units. Defaults are the exact/CODATA 2018 values;
/// tests may substitute other values to probe scaling.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J s
    double k_B = 1.380649e-23;      // J / K
};

inline constexpr PhysicalConstants codata{};

inline constexpr double nanometre = 1e-9;
inline constexpr double electron_mass = 9.11e-31;  // kg, as used for the reference figures

}  // namespace stirling
