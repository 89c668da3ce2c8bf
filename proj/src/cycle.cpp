#include "stirling/cycle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

// The four equilibrium states, in cycle order, for insertion at T_in and
// removal at T_out.
struct Strokes {
    double T_in;
    double T_out;
    ThermoState A;  // open box, T_in
    ThermoState B;  // barriers in, T_in
    ThermoState C;  // barriers in, T_out
    ThermoState D;  // open box, T_out
};

Strokes equilibrate(const CyclePoint& point, double T_in, double T_out,
                    const PhysicalConstants& constants) {
    const auto open = unpartitioned_model(point.well);
    const auto split = partitioned_model(point.well);
    const double m = point.well.mass;
    return {T_in,
            T_out,
            thermo_state(open, m, T_in, point.policy, constants),
            thermo_state(split, m, T_in, point.policy, constants),
            thermo_state(split, m, T_out, point.policy, constants),
            thermo_state(open, m, T_out, point.policy, constants)};
}

// Stage heats from the ground-shifted pieces. Each ground energy enters an
// isotherm twice with opposite sign (through U and through k_B T ln Z), and
// the isochores keep the spectrum fixed, so E0 drops out term by term:
//   Q_AB = U_B - U_A + k T ln(Z_B / Z_A) = dU'_AB + k T (ln S_B - ln S_A)
// with U' = U - E0 and S = sum g exp(-(E - E0) / k T).
CycleResult assemble(const Strokes& s, const PhysicalConstants& constants) {
    const double kT_in = constants.k_B * s.T_in;
    const double kT_out = constants.k_B * s.T_out;

    CycleResult r;
    r.Q_AB = (s.B.excess_energy - s.A.excess_energy) +
             kT_in * (s.B.log_shifted_sum - s.A.log_shifted_sum);
    r.Q_BC = s.C.excess_energy - s.B.excess_energy;
    r.Q_CD = (s.D.excess_energy - s.C.excess_energy) +
             kT_out * (s.D.log_shifted_sum - s.C.log_shifted_sum);
    r.Q_DA = s.A.excess_energy - s.D.excess_energy;

    r.W = kT_in * (s.B.log_shifted_sum - s.A.log_shifted_sum) -
          kT_out * (s.C.log_shifted_sum - s.D.log_shifted_sum);

    r.ln_Z_A = s.A.ln_Z;
    r.ln_Z_B = s.B.ln_Z;
    r.ln_Z_C = s.C.ln_Z;
    r.ln_Z_D = s.D.ln_Z;

    const double heat_sum = r.Q_AB + r.Q_BC + r.Q_CD + r.Q_DA;
    r.first_law_residual = heat_sum - r.W;

    const double scale = std::max({std::abs(r.Q_AB), std::abs(r.Q_BC), std::abs(r.Q_CD),
                                   std::abs(r.Q_DA), constants.k_B * std::min(s.T_in, s.T_out)});
    if (!(std::abs(r.first_law_residual) <= 1e-9 * scale)) {
        throw std::logic_error("stage heats and free-energy work disagree");
    }
    return r;
}

double strict_efficiency(const CycleResult& r) {
    double absorbed = 0.0;
    for (double q : {r.Q_AB, r.Q_BC, r.Q_CD, r.Q_DA}) absorbed += std::max(q, 0.0);
    return r.W / absorbed;
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::Engine: return "Engine";
        case Mode::Refrigerator: return "Refrigerator";
        case Mode::Dud: return "Dud";
    }
    return "Dud";
}

void CyclePoint::validate() const {
    well.validate();
    policy.validate();
    if (!(T_hot > 0.0) || !(T_cold > 0.0) || !std::isfinite(T_hot) || !std::isfinite(T_cold)) {
        throw DomainError("bath temperatures must be positive and finite");
    }
    if (T_hot < T_cold) {
        throw DomainError("T_hot must not be below T_cold; use the refrigerator cycle instead");
    }
}

CycleResult run_cycle(const CyclePoint& point, const PhysicalConstants& constants) {
    point.validate();
    const auto strokes = equilibrate(point, point.T_hot, point.T_cold, constants);
    CycleResult r = assemble(strokes, constants);
    r.lambda_hot = strokes.A.lambda;
    r.lambda_cold = strokes.D.lambda;

    const double supplied = r.heat_from_insertion_bath();
    const double from_cold = r.heat_from_removal_bath();
    if (r.W > 0.0 && supplied > 0.0) {
        r.mode = Mode::Engine;
        r.efficiency = 1.0 + from_cold / supplied;
        r.efficiency_strict = strict_efficiency(r);
    } else if (r.W < 0.0 && from_cold > 0.0) {
        r.mode = Mode::Refrigerator;
        r.cop = from_cold / -r.W;
    }
    return r;
}

CycleResult refrigerator_cop(const CyclePoint& point, const PhysicalConstants& constants) {
    point.validate();
    const auto strokes = equilibrate(point, point.T_cold, point.T_hot, constants);
    CycleResult r = assemble(strokes, constants);
    r.lambda_hot = strokes.D.lambda;
    r.lambda_cold = strokes.A.lambda;

    const double from_cold = r.heat_from_insertion_bath();
    const double from_hot = r.heat_from_removal_bath();
    const double work_in = -r.W;
    if (work_in > 0.0 && from_cold > 0.0) {
        r.mode = Mode::Refrigerator;
        r.cop = from_cold / work_in;
    } else if (r.W > 0.0 && from_hot > 0.0) {
        r.mode = Mode::Engine;
        r.efficiency = 1.0 + from_cold / from_hot;
        r.efficiency_strict = strict_efficiency(r);
    }
    return r;
}

WorkDecomposition decompose_work(const CyclePoint& point, const PhysicalConstants& constants) {
    point.validate();
    const auto* sym = std::get_if<SymmetricCount>(&point.well.partition);
    if (sym == nullptr) {
        throw UnsupportedDecomposition(
            "work decomposition needs a symmetric partition (exact degeneracy)");
    }
    const double m = point.well.mass;
    const double total = 2.0 * point.well.half_width;
    const auto open = SpectrumModel::single_well(total);
    const auto sub = SpectrumModel::single_well(total / static_cast<double>(sym->parts));

    const auto A = thermo_state(open, m, point.T_hot, point.policy, constants);
    const auto D = thermo_state(open, m, point.T_cold, point.policy, constants);
    const auto sub_hot = thermo_state(sub, m, point.T_hot, point.policy, constants);
    const auto sub_cold = thermo_state(sub, m, point.T_cold, point.policy, constants);

    const double kT_h = constants.k_B * point.T_hot;
    const double kT_c = constants.k_B * point.T_cold;
    const double shift = sub_hot.ground_energy - A.ground_energy;
    const double hot_shifted = kT_h * (sub_hot.log_shifted_sum - A.log_shifted_sum);
    const double cold_shifted = kT_c * (sub_cold.log_shifted_sum - D.log_shifted_sum);

    WorkDecomposition d;
    d.mixing_term = constants.k_B * (point.T_hot - point.T_cold) *
                    std::log(static_cast<double>(sym->parts));
    d.hot_compression_term = hot_shifted - shift;
    d.cold_expansion_term = shift - cold_shifted;
    d.finite_size_correction = hot_shifted - cold_shifted;
    return d;
}

LowTemperatureLimit low_temperature_limit(double T_hot, double T_cold, std::uint32_t parts,
                                          const PhysicalConstants& constants) {
    if (!(T_cold > 0.0) || !(T_hot >= T_cold) || !std::isfinite(T_hot)) {
        throw DomainError("low-temperature limit needs T_hot >= T_cold > 0");
    }
    if (parts < 1) throw DomainError("partition count must be >= 1");
    return {constants.k_B * (T_hot - T_cold) * std::log(static_cast<double>(parts)),
            1.0 - T_cold / T_hot};
}

}  // namespace stirling
