#pragma once

#include <optional>
#include <string_view>

#include "stirling/constants.hpp"
#include "stirling/spectrum.hpp"
#include "stirling/statmech.hpp"

namespace stirling {

/// One operating point of the four-stroke cycle. T_hot must exceed or equal
/// T_cold; to run "backwards" use refrigerator_cop() rather than swapping.
struct CyclePoint {
    WellConfig well;
    double T_hot = 2.0;   // K
    double T_cold = 1.0;  // K
    SeriesPolicy policy{};

    void validate() const;
};

enum class Mode { Engine, Refrigerator, Dud };

std::string_view to_string(Mode mode);

/// Stage heats are signed, positive when absorbed by the working medium.
/// Stage letters follow the order in which the cycle visits the states:
/// A (no barrier) -> B (barrier in, same bath) -> C (barrier in, other bath)
/// -> D (no barrier, other bath) -> A.
struct CycleResult {
    double Q_AB = 0;
    double Q_BC = 0;
    double Q_CD = 0;
    double Q_DA = 0;
    double W = 0;  // net work output, J

    std::optional<double> efficiency;         // 1 + (Q_BC + Q_CD) / (Q_DA + Q_AB), engines only
    std::optional<double> efficiency_strict;  // W / (sum of positive heats), engines only
    std::optional<double> cop;                // refrigerators only
    Mode mode = Mode::Dud;

    double ln_Z_A = 0;
    double ln_Z_B = 0;
    double ln_Z_C = 0;
    double ln_Z_D = 0;

    double lambda_hot = 0;   // ground energy of the open box over k_B T_hot
    double lambda_cold = 0;  // same at T_cold
    double first_law_residual = 0;  // (Q_AB + Q_BC + Q_CD + Q_DA) - W

    /// Heat taken from the bath that hosts the insertion stroke (Q_DA + Q_AB).
    double heat_from_insertion_bath() const { return Q_DA + Q_AB; }
    /// Heat taken from the bath that hosts the removal stroke (Q_BC + Q_CD).
    double heat_from_removal_bath() const { return Q_BC + Q_CD; }
};

/// Heat engine: insertion isotherm at T_hot, removal isotherm at T_cold.
CycleResult run_cycle(const CyclePoint& point, const PhysicalConstants& constants = codata);

/// Refrigerator: insertion at T_cold, removal at T_hot. Heats keep the stage
/// lettering of the reversed cycle (Q_AB is the cold insertion isotherm).
/// Reports cop when heat is pumped out of the cold bath with work input, or
/// falls back to Engine mode when the reversed cycle delivers work instead.
CycleResult refrigerator_cop(const CyclePoint& point,
                             const PhysicalConstants& constants = codata);

/// W split into the degeneracy (mixing) term and the compression/expansion
/// work of a box going between widths 2a and 2a/N at each bath.
struct WorkDecomposition {
    double mixing_term = 0;            // k_B (T_h - T_c) ln N
    double hot_compression_term = 0;   // k_B T_h ln(Z_{2a/N, T_h} / Z_A)
    double cold_expansion_term = 0;    // -k_B T_c ln(Z_{2a/N, T_c} / Z_D)

    /// hot + cold formed without the ground-energy offsets, which cancel
    /// exactly between the two strokes. Stays resolvable when the sum is far
    /// below the rounding of the individual terms.
    double finite_size_correction = 0;
};

/// Requires a symmetric partition; throws UnsupportedDecomposition otherwise.
WorkDecomposition decompose_work(const CyclePoint& point,
                                 const PhysicalConstants& constants = codata);

struct LowTemperatureLimit {
    double W;    // k_B (T_h - T_c) ln N
    double eta;  // 1 - T_c / T_h
};

LowTemperatureLimit low_temperature_limit(double T_hot, double T_cold, std::uint32_t parts,
                                          const PhysicalConstants& constants = codata);

}  // namespace stirling
