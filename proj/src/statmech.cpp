#include "stirling/statmech.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

std::string describe_cap(std::size_t terms, double tail_ratio) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "series cap exceeded after %zu terms (tail ratio %.3e above tolerance)", terms,
                  tail_ratio);
    return buf;
}

void require_temperature(double temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw DomainError("temperature must be positive and finite, got " +
                          std::to_string(temperature));
    }
}

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0;
    double carry = 0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

}  // namespace

SeriesCapExceeded::SeriesCapExceeded(std::size_t terms, double tail_ratio)
    : std::runtime_error(describe_cap(terms, tail_ratio)), terms_(terms), tail_ratio_(tail_ratio) {}

void SeriesPolicy::validate() const {
    if (!(relative_tail_tol > 0.0 && relative_tail_tol < 1.0)) {
        throw DomainError("relative_tail_tol must lie in (0, 1)");
    }
    if (min_terms < 1 || min_terms > max_terms) {
        throw DomainError("series policy needs 1 <= min_terms <= max_terms");
    }
}

ThermoState thermo_state(const SpectrumModel& model, double mass, double temperature,
                         const SeriesPolicy& policy, const PhysicalConstants& constants) {
    require_temperature(temperature);
    policy.validate();

    const double kT = constants.k_B * temperature;
    const double beta = 1.0 / kT;

    LevelStream levels(model, mass, constants);
    const Level ground = levels.next();
    const auto g0 = static_cast<double>(ground.degeneracy);

    // Weights are normalised to the ground level (weight 1, excess x = 0).
    // Mean and variance of the excess x = (E - E0) / kT use West's weighted
    // update; the raw moment sums only drive the stopping rule.
    CompensatedSum tail;
    double weight_total = 1.0;
    double mean = 0.0;
    double m2 = 0.0;
    double first_moment = 0.0;
    double second_moment = 0.0;
    std::size_t consumed = 1;
    double tail_ratio = 1.0;

    bool converged = false;
    while (!converged) {
        if (consumed >= policy.max_terms) throw SeriesCapExceeded(consumed, tail_ratio);

        const Level level = levels.next();
        ++consumed;
        const double x = beta * (level.energy - ground.energy);
        const double w = static_cast<double>(level.degeneracy) / g0 * std::exp(-x);

        tail.add(w);
        weight_total += w;
        if (w > 0.0) {
            const double delta = x - mean;
            const double r = delta * w / weight_total;
            mean += r;
            m2 += (weight_total - w) * delta * r;
        }
        first_moment += w * x;
        second_moment += w * x * x;

        const double running = 1.0 + tail.value();
        tail_ratio = w / running;
        converged = consumed >= policy.min_terms && w < policy.relative_tail_tol * running &&
                    w * x <= policy.relative_tail_tol * first_moment &&
                    w * x * x <= policy.relative_tail_tol * second_moment;
    }

    ThermoState s;
    s.temperature = temperature;
    s.terms_used = consumed;
    s.ground_energy = ground.energy;
    s.ground_degeneracy = ground.degeneracy;
    s.lambda = beta * ground.energy;
    s.log_shifted_sum = std::log(g0) + std::log1p(tail.value());
    s.excess_energy = kT * mean;
    s.ln_Z = s.log_shifted_sum - s.lambda;
    s.internal_energy = ground.energy + s.excess_energy;
    s.entropy = constants.k_B * (s.log_shifted_sum + mean);
    s.heat_capacity = constants.k_B * (m2 / weight_total);
    s.free_energy = -kT * s.ln_Z;
    return s;
}

LogPartition log_partition(const SpectrumModel& model, double mass, double temperature,
                           const SeriesPolicy& policy, const PhysicalConstants& constants) {
    const auto s = thermo_state(model, mass, temperature, policy, constants);
    return {s.ln_Z, s.terms_used};
}

double internal_energy(const SpectrumModel& model, double mass, double temperature,
                       const SeriesPolicy& policy, const PhysicalConstants& constants) {
    return thermo_state(model, mass, temperature, policy, constants).internal_energy;
}

double entropy(const SpectrumModel& model, double mass, double temperature,
               const SeriesPolicy& policy, const PhysicalConstants& constants) {
    return thermo_state(model, mass, temperature, policy, constants).entropy;
}

double heat_capacity(const SpectrumModel& model, double mass, double temperature,
                     const SeriesPolicy& policy, const PhysicalConstants& constants) {
    return thermo_state(model, mass, temperature, policy, constants).heat_capacity;
}

double two_level_heat_capacity(double omega, double temperature,
                               const PhysicalConstants& constants) {
    require_temperature(temperature);
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw DomainError("level spacing must be non-negative and finite");
    }
    const double x = omega / (constants.k_B * temperature);
    // e^{x} / (1 + e^{x})^2 rewritten in e^{-x} so large x does not overflow.
    const double e = std::exp(-x);
    return constants.k_B * x * x * e / ((1.0 + e) * (1.0 + e));
}

double control_parameter(double width, double mass, double temperature,
                         const PhysicalConstants& constants) {
    require_temperature(temperature);
    return single_well_level(width, mass, 1, constants) / (constants.k_B * temperature);
}

}  // namespace stirling
