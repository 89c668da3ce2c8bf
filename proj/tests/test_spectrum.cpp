#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "stirling/errors.hpp"
#include "stirling/spectrum.hpp"

using namespace stirling;
using oracle::rel_diff;

namespace {

constexpr double m_e = 9.11e-31;

// Per-well levels up to `cap`, concatenated, sorted and coalesced.
std::vector<Level> brute_force_merge(const std::vector<double>& widths, double cap) {
    std::vector<double> energies;
    for (double w : widths) {
        for (std::uint64_t n = 1;; ++n) {
            const double e = single_well_level(w, m_e, n);
            if (e > cap) break;
            energies.push_back(e);
        }
    }
    std::sort(energies.begin(), energies.end());
    std::vector<Level> merged;
    for (double e : energies) {
        if (!merged.empty() && std::abs(e - merged.back().energy) <= 1e-12 * e) {
            ++merged.back().degeneracy;
        } else {
            merged.push_back({e, 1});
        }
    }
    return merged;
}

}  // namespace

TEST_CASE("single well ground level for an electron in a 1 nm box") {
    // pi^2 hbar^2 / (2 m L^2), evaluated at 40 digits.
    CHECK(rel_diff(single_well_level(1e-9, m_e, 1), 6.024259821476178e-20) < 1e-14);
}

TEST_CASE("single well levels scale as n^2 and 1/L^2") {
    const double e1 = single_well_level(1e-9, m_e, 1);
    CHECK(single_well_level(1e-9, m_e, 2) == 4.0 * e1);
    CHECK(rel_diff(single_well_level(2e-9, m_e, 1), e1 / 4.0) < 1e-15);
    for (std::uint64_t n = 1; n < 50; ++n) {
        CHECK(single_well_level(1e-9, m_e, n + 1) > single_well_level(1e-9, m_e, n));
    }
}

TEST_CASE("even levels of a box equal the levels of a box half as wide") {
    for (std::uint64_t k = 1; k <= 20; ++k) {
        CHECK(rel_diff(single_well_level(1e-9, m_e, 2 * k), single_well_level(5e-10, m_e, k)) <
              1e-15);
    }
}

TEST_CASE("single_well_level rejects non-physical input") {
    CHECK_THROWS_AS(single_well_level(0.0, m_e, 1), DomainError);
    CHECK_THROWS_AS(single_well_level(-1e-9, m_e, 1), DomainError);
    CHECK_THROWS_AS(single_well_level(1e-9, 0.0, 1), DomainError);
    CHECK_THROWS_AS(single_well_level(1e-9, m_e, 0), DomainError);
    CHECK_THROWS_AS(single_well_level(std::nan(""), m_e, 1), DomainError);
}

TEST_CASE("symmetric split of a 1 nm box: doubly degenerate 0.5 nm levels") {
    const auto levels = enumerate_levels(SpectrumModel::symmetric_split(1e-9, 2), m_e, 10);
    CHECK(levels.front().energy == single_well_level(5e-10, m_e, 1));
    for (std::size_t i = 0; i < levels.size(); ++i) {
        CHECK(levels[i].degeneracy == 2);
        // (2n)^2 E_1(2a) written directly.
        const double n = static_cast<double>(2 * (i + 1));
        CHECK(rel_diff(levels[i].energy, single_well_level(1e-9, m_e, 1) * n * n) < 1e-14);
    }
}

TEST_CASE("degeneracy identity: SymmetricSplit{L, N} is N copies of SingleWell{L/N}") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> width(1e-10, 1e-7);
    for (int trial = 0; trial < 20; ++trial) {
        const double L = width(rng);
        for (std::uint32_t N = 1; N <= 6; ++N) {
            const auto split = enumerate_levels(SpectrumModel::symmetric_split(L, N), m_e, 30);
            const auto single =
                enumerate_levels(SpectrumModel::single_well(L / static_cast<double>(N)), m_e, 30);
            for (std::size_t i = 0; i < split.size(); ++i) {
                CHECK(split[i].energy == single[i].energy);
                CHECK(split[i].degeneracy == N);
                CHECK(single[i].degeneracy == 1);
            }
        }
    }
}

TEST_CASE("union of two identical wells equals the symmetric split") {
    const double w = 7.3e-10;
    const auto u = enumerate_levels(SpectrumModel::union_of_wells({w, w}), m_e, 40);
    const auto s = enumerate_levels(SpectrumModel::symmetric_split(2 * w, 2), m_e, 40);
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(u[i].energy == s[i].energy);
        CHECK(u[i].degeneracy == s[i].degeneracy);
    }
}

TEST_CASE("offset barrier lifts the degeneracy; the wider well holds the ground level") {
    const double a = 5e-10, eps = 5e-11;
    const auto levels = enumerate_levels(SpectrumModel::union_of_wells({a + eps, a - eps}), m_e, 40);
    CHECK(levels.front().energy == single_well_level(a + eps, m_e, 1));
    // Widths in ratio 11:9 share every level n = 11k of the wider well.
    const double e1 = single_well_level(a + eps, m_e, 1);
    for (const auto& l : levels) {
        const double n = std::sqrt(l.energy / e1);
        const double k = std::round(n / 11);
        if (k >= 1 && std::abs(n - 11 * k) < 1e-9) {
            CHECK(l.degeneracy == 2);
        } else {
            CHECK(l.degeneracy == 1);
        }
    }
}

TEST_CASE("union merge agrees with brute-force concatenate-sort-coalesce") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> width(2e-10, 5e-9);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<std::vector<double>> cases = {
        {1e-9, 2e-9},          // commensurate: every level of the narrow well recurs
        {1e-9, 2e-9, 3e-9},
        {1e-9, 1e-9, 1e-9},
        {3e-9},
    };
    for (int i = 0; i < 30; ++i) {
        std::vector<double> ws(static_cast<std::size_t>(count(rng)));
        for (auto& w : ws) w = width(rng);
        cases.push_back(ws);
    }
    for (const auto& ws : cases) {
        const double widest = *std::max_element(ws.begin(), ws.end());
        const double cap = single_well_level(widest, m_e, 60);
        const auto expected = brute_force_merge(ws, cap);
        const auto got = enumerate_levels(SpectrumModel::union_of_wells(ws), m_e, expected.size());
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(rel_diff(got[k].energy, expected[k].energy) <= 1e-12);
            CHECK(got[k].degeneracy == expected[k].degeneracy);
        }
    }
}

TEST_CASE("level streams are nondecreasing with positive degeneracy") {
    const std::vector<SpectrumModel> models = {
        SpectrumModel::single_well(1e-9),
        SpectrumModel::symmetric_split(1e-9, 3),
        SpectrumModel::union_of_wells({5.5e-10, 4.5e-10}),
        SpectrumModel::union_of_wells({1e-9, 2e-9, 2.5e-9}),
    };
    for (const auto& model : models) {
        const auto levels = enumerate_levels(model, m_e, 500);
        for (std::size_t i = 1; i < levels.size(); ++i) {
            CHECK(levels[i].energy > levels[i - 1].energy);
        }
        for (const auto& l : levels) {
            CHECK(l.degeneracy >= 1);
            CHECK(l.energy > 0.0);
        }
    }
}

TEST_CASE("invalid spectrum models are rejected") {
    CHECK_THROWS_AS(SpectrumModel::single_well(0.0), DomainError);
    CHECK_THROWS_AS(SpectrumModel::symmetric_split(1e-9, 0), DomainError);
    CHECK_THROWS_AS(SpectrumModel::union_of_wells({}), DomainError);
    CHECK_THROWS_AS(SpectrumModel::union_of_wells({1e-9, -1e-9}), DomainError);
    CHECK_THROWS_AS(enumerate_levels(SpectrumModel::single_well(1e-9), m_e, 0), DomainError);
    CHECK_THROWS_AS(enumerate_levels(SpectrumModel::single_well(1e-9), -1.0, 3), DomainError);
}

TEST_CASE("well configurations map onto open and partitioned spectra") {
    WellConfig sym{5e-10, m_e, SymmetricCount{3}};
    const auto open = unpartitioned_model(sym);
    CHECK(std::get<SingleWell>(open.variant()).width == 1e-9);
    const auto partitioned = partitioned_model(sym);
    const auto& split = std::get<SymmetricSplit>(partitioned.variant());
    CHECK(split.total_width == 1e-9);
    CHECK(split.parts == 3);

    WellConfig asym{5e-10, m_e, AsymmetricSingle{1e-10}};
    const auto offset = partitioned_model(asym);
    const auto& u = std::get<UnionOfWells>(offset.variant());
    REQUIRE(u.widths.size() == 2);
    CHECK(u.widths[0] == 6e-10);
    CHECK(rel_diff(u.widths[1], 4e-10) < 1e-15);

    CHECK_THROWS_AS((WellConfig{5e-10, m_e, AsymmetricSingle{5e-10}}.validate()), DomainError);
    CHECK_THROWS_AS((WellConfig{5e-10, m_e, AsymmetricSingle{-1e-12}}.validate()), DomainError);
    CHECK_THROWS_AS((WellConfig{5e-10, m_e, SymmetricCount{0}}.validate()), DomainError);
    CHECK_THROWS_AS((WellConfig{0.0, m_e}.validate()), DomainError);
    CHECK_NOTHROW((WellConfig{5e-10, m_e, AsymmetricSingle{0.0}}.validate()));
}
