#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "oracles.hpp"
#include "stirling/errors.hpp"
#include "stirling/statmech.hpp"

using namespace stirling;
using oracle::rel_diff;

namespace {

constexpr double m_e = 9.11e-31;
constexpr double L = 1e-9;

// Temperature at which a single well of width L has ground energy lambda k_B T.
double temperature_for(double lambda, double width = L) {
    return single_well_level(width, m_e, 1) / (lambda * codata.k_B);
}

}  // namespace

TEST_CASE("deep ground-state dominance at lambda = 100") {
    const auto model = SpectrumModel::single_well(L);
    const auto s = thermo_state(model, m_e, temperature_for(100.0));
    CHECK(rel_diff(s.lambda, 100.0) < 1e-13);
    // Next term is e^{-300}: ln Z is -lambda to the last bit.
    CHECK(std::abs(s.ln_Z - (-s.lambda)) <= 1e-40);
    CHECK(std::abs(s.internal_energy - single_well_level(L, m_e, 1)) <=
          1e-40 * s.internal_energy);
    CHECK(s.log_shifted_sum < 1e-100);
}

TEST_CASE("lambda = 1 against direct summation") {
    const auto model = SpectrumModel::single_well(L);
    const double T = temperature_for(1.0);
    const auto s = thermo_state(model, m_e, T);
    const double lambda = s.lambda;
    // sum_{n<=50} e^{-n^2} and its energy moment, at 40 digits.
    CHECK(std::abs(s.ln_Z - -0.95109285511513686) < 1e-12);
    CHECK(std::abs(s.internal_energy / (codata.k_B * T) - 1.1447921045230672) < 1e-12);
    // Same thing from the long-double oracle, at the actual lambda.
    CHECK(rel_diff(s.ln_Z, static_cast<double>(oracle::log_partition(lambda, 50))) < 1e-14);
    CHECK(rel_diff(s.internal_energy / (codata.k_B * T),
                   static_cast<double>(oracle::reduced_energy(lambda, 50))) < 1e-14);
}

TEST_CASE("symmetric split factorises into ln N plus the sub-well") {
    for (std::uint32_t N = 1; N <= 5; ++N) {
        for (double lambda : {0.01, 0.3, 1.0, 10.0, 80.0}) {
            const double T = temperature_for(lambda);
            const auto split = thermo_state(SpectrumModel::symmetric_split(L, N), m_e, T);
            const auto sub = thermo_state(SpectrumModel::single_well(L / N), m_e, T);
            CHECK(split.terms_used == sub.terms_used);
            CHECK(split.ground_energy == sub.ground_energy);
            CHECK(split.excess_energy == sub.excess_energy);
            CHECK(split.heat_capacity == sub.heat_capacity);
            CHECK(split.internal_energy == sub.internal_energy);
            const double residual = split.ln_Z - std::log(double(N)) - sub.ln_Z;
            CHECK(std::abs(residual) <= 4e-16 * std::max(1.0, std::abs(sub.ln_Z)));
        }
    }
}

TEST_CASE("entropy limits: zero in the open box, k_B ln 2 behind a barrier") {
    for (double lambda : {50.0, 200.0, 5000.0}) {
        const double T = temperature_for(lambda);
        CHECK(entropy(SpectrumModel::single_well(L), m_e, T) < 1e-15);
        const double s2 = entropy(SpectrumModel::symmetric_split(L, 2), m_e, temperature_for(lambda, L / 2));
        CHECK(rel_diff(s2, codata.k_B * std::numbers::ln2) < 1e-12);
    }
}

TEST_CASE("heat capacity vanishes at low temperature") {
    for (double lambda : {50.0, 500.0}) {
        CHECK(heat_capacity(SpectrumModel::single_well(L), m_e, temperature_for(lambda)) < 1e-15);
    }
}

TEST_CASE("heat capacity matches a centred difference of U") {
    const std::vector<SpectrumModel> models = {
        SpectrumModel::single_well(L),
        SpectrumModel::symmetric_split(L, 3),
        SpectrumModel::union_of_wells({5.5e-10, 4.5e-10}),
        SpectrumModel::union_of_wells({1e-9, 2.3e-9}),
    };
    for (const auto& model : models) {
        for (double lambda : {0.01, 0.1, 1.0, 10.0, 30.0}) {
            const double T = temperature_for(lambda);
            // The truncation error grows as (h gap / k T^2)^2, so shrink h with the gap.
            const auto two = enumerate_levels(model, m_e, 2);
            const double gap = (two[1].energy - two[0].energy) / (codata.k_B * T);
            const double h = 1e-4 * T / std::max(1.0, gap);
            // E0 does not depend on T; difference the excess energy to keep digits.
            const double up = thermo_state(model, m_e, T + h).excess_energy;
            const double down = thermo_state(model, m_e, T - h).excess_energy;
            const double fd = (up - down) / (2 * h);
            CHECK(rel_diff(heat_capacity(model, m_e, T), fd) < 1e-6);
        }
    }
}

TEST_CASE("degeneracy cancels in the heat capacity") {
    const double w = 8e-10;
    for (double lambda : {0.05, 2.0, 20.0}) {
        const double T = temperature_for(lambda, w);
        CHECK(heat_capacity(SpectrumModel::union_of_wells({w, w}), m_e, T) ==
              heat_capacity(SpectrumModel::single_well(w), m_e, T));
        CHECK(internal_energy(SpectrumModel::symmetric_split(2 * w, 2), m_e, T) ==
              internal_energy(SpectrumModel::single_well(w), m_e, T));
    }
}

TEST_CASE("thermodynamic identities hold across spectra and temperatures") {
    const std::vector<SpectrumModel> models = {
        SpectrumModel::single_well(L),
        SpectrumModel::symmetric_split(L, 2),
        SpectrumModel::symmetric_split(L, 4),
        SpectrumModel::union_of_wells({6e-10, 4e-10}),
    };
    for (const auto& model : models) {
        for (double lambda : {0.001, 0.01, 0.1, 1.0, 10.0, 100.0}) {
            const double T = temperature_for(lambda);
            const auto s = thermo_state(model, m_e, T);
            CHECK(s.entropy >= 0.0);
            CHECK(s.heat_capacity >= 0.0);
            CHECK(s.internal_energy >= s.ground_energy);
            CHECK(rel_diff(s.free_energy, -codata.k_B * T * s.ln_Z) < 1e-12);
            CHECK(rel_diff(s.free_energy, s.internal_energy - T * s.entropy) < 1e-12);
            // k ln Z and U / T nearly cancel once E0 >> k T, so measure the
            // residual against the size of the terms rather than of S.
            const double terms = std::max(std::abs(codata.k_B * s.ln_Z), s.internal_energy / T);
            CHECK(std::abs(s.entropy - (codata.k_B * s.ln_Z + s.internal_energy / T)) <=
                  1e-12 * terms);
        }
    }
}

TEST_CASE("adaptive sums agree with a million-term brute force") {
    for (double lambda : {0.01, 0.1, 1.0, 10.0}) {
        const double T = temperature_for(lambda);
        const auto s = thermo_state(SpectrumModel::single_well(L), m_e, T);
        const double brute = static_cast<double>(oracle::log_partition(s.lambda, 1'000'000));
        CHECK(rel_diff(s.ln_Z, brute) < 1e-12);
        CHECK(s.terms_used < 1000);
    }
}

TEST_CASE("halving the tail tolerance barely moves ln Z") {
    for (double tol : {1e-6, 1e-9, 1e-12}) {
        for (double lambda : {0.001, 0.1, 3.0}) {
            const double T = temperature_for(lambda);
            const auto model = SpectrumModel::single_well(L);
            const double coarse = log_partition(model, m_e, T, {tol, 8, 10'000'000}).ln_Z;
            const double fine = log_partition(model, m_e, T, {tol / 2, 8, 10'000'000}).ln_Z;
            CHECK(std::abs(coarse - fine) < 10 * tol * std::max(1.0, std::abs(fine)));
        }
    }
}

TEST_CASE("series cap and domain errors") {
    const auto model = SpectrumModel::single_well(L);
    const double T = temperature_for(1e-6);
    try {
        thermo_state(model, m_e, T, {1e-16, 8, 100});
        FAIL("expected SeriesCapExceeded");
    } catch (const SeriesCapExceeded& e) {
        CHECK(e.terms() == 100);
        CHECK(e.tail_ratio() > 1e-16);
        CHECK(std::string(e.what()).find("tail ratio") != std::string::npos);
    }
    CHECK_THROWS_AS(thermo_state(model, m_e, 0.0), DomainError);
    CHECK_THROWS_AS(thermo_state(model, m_e, -1.0), DomainError);
    CHECK_THROWS_AS(thermo_state(model, m_e, 1.0, {0.0, 8, 10}), DomainError);
    CHECK_THROWS_AS(thermo_state(model, m_e, 1.0, {1.5, 8, 10}), DomainError);
    CHECK_THROWS_AS(thermo_state(model, m_e, 1.0, {1e-10, 0, 10}), DomainError);
    CHECK_THROWS_AS(thermo_state(model, m_e, 1.0, {1e-10, 20, 10}), DomainError);
}

TEST_CASE("two-level heat capacity") {
    const double T = 1.5;
    const double kT = codata.k_B * T;
    CHECK(two_level_heat_capacity(0.0, T) == 0.0);
    // e / (1 + e)^2 at 40 digits.
    CHECK(std::abs(two_level_heat_capacity(kT, T) / codata.k_B - 0.19661193324148185) < 1e-12);
    CHECK(two_level_heat_capacity(50 * kT, T) < 1e-18 * codata.k_B);
    CHECK(two_level_heat_capacity(1e4 * kT, T) == 0.0);
    CHECK_THROWS_AS(two_level_heat_capacity(kT, 0.0), DomainError);
    CHECK_THROWS_AS(two_level_heat_capacity(-kT, T), DomainError);
}

TEST_CASE("control parameter is the ground energy over k_B T") {
    CHECK(rel_diff(control_parameter(L, m_e, 2.0), single_well_level(L, m_e, 1) / (2.0 * codata.k_B)) <
          1e-15);
    CHECK_THROWS_AS(control_parameter(L, m_e, 0.0), DomainError);
}
