#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "stirling/constants.hpp"

namespace stirling {

enum class ParticleStatistics { Distinguishable, Boson, Fermion };

std::string_view to_string(ParticleStatistics stats);
std::optional<ParticleStatistics> parse_statistics(std::string_view name);

using BigCount = boost::multiprecision::cpp_int;

/// Ways to place n particles into the ground level after g barriers make it
/// (g+1)-fold degenerate.
///
/// Distinguishable: (g+1)^n. Bosons: C(n+g, n). Spinless fermions fill whole
/// shells of size g+1 first; only the partially filled top shell contributes,
/// C(g+1, n mod (g+1)), and a set of complete shells has one arrangement.
BigCount microstate_count(ParticleStatistics stats, std::uint32_t n, std::uint32_t g);

/// Natural log of an exact count, accurate for counts beyond double range.
double log_count(const BigCount& count);

/// Explicit enumeration of the same arrangements. Limited to n, g <= 8.
std::uint64_t enumerate_microstates(ParticleStatistics stats, std::uint32_t n, std::uint32_t g);

/// Low-temperature work k_B (T_h - T_c) ln(count). Requires T_h > T_c > 0.
double low_T_work(ParticleStatistics stats, std::uint32_t n, std::uint32_t g, double T_hot,
                  double T_cold, const PhysicalConstants& constants = codata);

}  // namespace stirling
