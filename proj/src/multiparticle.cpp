#include "stirling/multiparticle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

void require_counts(std::uint32_t n, std::uint32_t g) {
    if (n < 1) throw DomainError("particle count must be >= 1");
    if (g < 1) throw DomainError("barrier count must be >= 1");
}

BigCount binomial(std::uint64_t top, std::uint64_t k) {
    k = std::min(k, top - k);
    BigCount result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i;  // exact: result is C(top - k + i, i) here
    }
    return result;
}

// Visits every nondecreasing sequence of length n over [0, states).
std::uint64_t count_multisets(std::uint32_t n, std::uint32_t states) {
    std::vector<std::uint32_t> seq(n, 0);
    std::uint64_t count = 0;
    while (true) {
        ++count;
        std::size_t pos = n;
        while (pos > 0 && seq[pos - 1] == states - 1) --pos;
        if (pos == 0) return count;
        const std::uint32_t v = seq[pos - 1] + 1;
        std::fill(seq.begin() + static_cast<std::ptrdiff_t>(pos - 1), seq.end(), v);
    }
}

// Visits every map from n labelled particles to `states` single-particle states.
std::uint64_t count_assignments(std::uint32_t n, std::uint32_t states) {
    std::vector<std::uint32_t> digits(n, 0);
    std::uint64_t count = 0;
    while (true) {
        ++count;
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == states) digits[pos++] = 0;
        if (pos == n) return count;
    }
}

}  // namespace

std::string_view to_string(ParticleStatistics stats) {
    switch (stats) {
        case ParticleStatistics::Distinguishable: return "distinguishable";
        case ParticleStatistics::Boson: return "boson";
        case ParticleStatistics::Fermion: return "fermion";
    }
    return "distinguishable";
}

std::optional<ParticleStatistics> parse_statistics(std::string_view name) {
    for (auto s : {ParticleStatistics::Distinguishable, ParticleStatistics::Boson,
                   ParticleStatistics::Fermion}) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

BigCount microstate_count(ParticleStatistics stats, std::uint32_t n, std::uint32_t g) {
    require_counts(n, g);
    const std::uint64_t shell = std::uint64_t{g} + 1;
    switch (stats) {
        case ParticleStatistics::Distinguishable: return boost::multiprecision::pow(BigCount(shell), n);
        case ParticleStatistics::Boson: return binomial(std::uint64_t{n} + g, n);
        case ParticleStatistics::Fermion: {
            const std::uint64_t partial = n % shell;
            return partial == 0 ? BigCount(1) : binomial(shell, partial);
        }
    }
    return 1;
}

double log_count(const BigCount& count) {
    if (count <= 0) throw DomainError("log of non-positive count");
    const std::size_t bits = boost::multiprecision::msb(count) + 1;
    if (bits <= 53) return std::log(count.convert_to<double>());
    // Keep the leading 64 bits; the dropped ones perturb ln by < 2^-60.
    const std::size_t shift = bits - 64;
    const BigCount head = count >> shift;
    return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

std::uint64_t enumerate_microstates(ParticleStatistics stats, std::uint32_t n, std::uint32_t g) {
    require_counts(n, g);
    if (n > 8 || g > 8) throw EnumerationTooLarge("exhaustive enumeration is capped at n, g <= 8");
    const std::uint32_t states = g + 1;
    switch (stats) {
        case ParticleStatistics::Distinguishable: return count_assignments(n, states);
        case ParticleStatistics::Boson: return count_multisets(n, states);
        case ParticleStatistics::Fermion: {
            // Lower shells are full; scan occupancy bit patterns of the top one.
            const std::uint32_t partial = n % states;
            if (partial == 0) return 1;
            std::uint64_t count = 0;
            for (std::uint32_t mask = 0; mask < (1u << states); ++mask) {
                if (static_cast<std::uint32_t>(std::popcount(mask)) == partial) ++count;
            }
            return count;
        }
    }
    return 0;
}

double low_T_work(ParticleStatistics stats, std::uint32_t n, std::uint32_t g, double T_hot,
                  double T_cold, const PhysicalConstants& constants) {
    if (!(T_cold > 0.0) || !(T_hot > T_cold) || !std::isfinite(T_hot)) {
        throw DomainError("low-temperature work needs T_hot > T_cold > 0");
    }
    const BigCount count = microstate_count(stats, n, g);
    if (count == 1) return 0.0;
    return constants.k_B * (T_hot - T_cold) * log_count(count);
}

}  // namespace stirling
