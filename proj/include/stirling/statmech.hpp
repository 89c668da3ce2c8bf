#pragma once

#include <cstddef>
#include <cstdint>

#include "stirling/constants.hpp"
#include "stirling/spectrum.hpp"

namespace stirling {

/// Truncation rule for the level sums.
struct SeriesPolicy {
    double relative_tail_tol = 1e-16;
    std::size_t min_terms = 8;
    std::size_t max_terms = 10'000'000;

    void validate() const;
};

/// Canonical equilibrium of a spectrum at one temperature.
///
/// All sums are taken relative to the ground level E0, so the shifted pieces
/// (log_shifted_sum, excess_energy) stay well conditioned when E0 >> k_B T.
/// Differences between states should be formed from those pieces; ln_Z and
/// internal_energy are reconstructed from them.
struct ThermoState {
    double temperature = 0;    // K
    double ln_Z = 0;           // ln sum_i g_i exp(-E_i / k_B T)
    double internal_energy = 0;// J
    double entropy = 0;        // J / K
    double heat_capacity = 0;  // J / K
    double free_energy = 0;    // J
    std::size_t terms_used = 0;

    double ground_energy = 0;            // E0, J
    std::uint64_t ground_degeneracy = 0; // g0
    double log_shifted_sum = 0;          // ln sum_i g_i exp(-(E_i - E0) / k_B T)
    double excess_energy = 0;            // U - E0, J
    double lambda = 0;                   // E0 / k_B T
};

ThermoState thermo_state(const SpectrumModel& model, double mass, double temperature,
                         const SeriesPolicy& policy = {},
                         const PhysicalConstants& constants = codata);

struct LogPartition {
    double ln_Z;
    std::size_t terms_used;
};

LogPartition log_partition(const SpectrumModel& model, double mass, double temperature,
                           const SeriesPolicy& policy = {},
                           const PhysicalConstants& constants = codata);

double internal_energy(const SpectrumModel& model, double mass, double temperature,
                       const SeriesPolicy& policy = {},
                       const PhysicalConstants& constants = codata);

double entropy(const SpectrumModel& model, double mass, double temperature,
               const SeriesPolicy& policy = {}, const PhysicalConstants& constants = codata);

double heat_capacity(const SpectrumModel& model, double mass, double temperature,
                     const SeriesPolicy& policy = {},
                     const PhysicalConstants& constants = codata);

/// Heat capacity of a two-level system with spacing omega (J):
/// (omega^2 / k_B T^2) e^{x} / (1 + e^{x})^2 with x = omega / k_B T.
double two_level_heat_capacity(double omega, double temperature,
                               const PhysicalConstants& constants = codata);

/// pi^2 hbar^2 / (2 m L^2 k_B T): ground energy of a well of width L in units of k_B T.
double control_parameter(double width, double mass, double temperature,
                         const PhysicalConstants& constants = codata);

}  // namespace stirling
