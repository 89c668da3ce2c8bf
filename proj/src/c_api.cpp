#include "stirling/stirling.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "stirling/cycle.hpp"
#include "stirling/errors.hpp"
#include "stirling/multiparticle.hpp"
#include "stirling/spectrum.hpp"
#include "stirling/statmech.hpp"

struct stirling_context {
    stirling::PhysicalConstants constants{};
    stirling::SeriesPolicy policy{};
};

struct stirling_spectrum {
    stirling::SpectrumModel model;
};

namespace {

thread_local std::string last_error;

stirling_status fail(stirling_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
stirling_status guarded(Body&& body) {
    try {
        body();
        last_error.clear();
        return STIRLING_OK;
    } catch (const stirling::SeriesCapExceeded& e) {
        return fail(STIRLING_E_SERIES_CAP, e.what());
    } catch (const stirling::UnsupportedDecomposition& e) {
        return fail(STIRLING_E_UNSUPPORTED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(STIRLING_E_INVALID_ARGUMENT, e.what());
    } catch (const stirling::EnumerationTooLarge& e) {
        return fail(STIRLING_E_DOMAIN, e.what());
    } catch (const stirling::DomainError& e) {
        return fail(STIRLING_E_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(STIRLING_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(STIRLING_E_INTERNAL, e.what());
    }
}

#define STIRLING_REQUIRE(cond)                                                 \
    do {                                                                       \
        if (!(cond)) return fail(STIRLING_E_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
    } while (0)

bool to_statistics(stirling_statistics in, stirling::ParticleStatistics& out) {
    switch (in) {
        case STIRLING_STATS_DISTINGUISHABLE: out = stirling::ParticleStatistics::Distinguishable; return true;
        case STIRLING_STATS_BOSON: out = stirling::ParticleStatistics::Boson; return true;
        case STIRLING_STATS_FERMION: out = stirling::ParticleStatistics::Fermion; return true;
    }
    return false;
}

stirling::CyclePoint to_point(const stirling_context& ctx, const stirling_point& p) {
    stirling::CyclePoint point;
    point.well.half_width = p.half_width_m;
    point.well.mass = p.mass_kg;
    switch (p.partition) {
        case STIRLING_PARTITION_SYMMETRIC:
            point.well.partition = stirling::SymmetricCount{p.parts};
            break;
        case STIRLING_PARTITION_ASYMMETRIC:
            point.well.partition = stirling::AsymmetricSingle{p.offset_m};
            break;
        default:
            throw std::invalid_argument("unknown partition kind");
    }
    point.T_hot = p.t_hot_k;
    point.T_cold = p.t_cold_k;
    point.policy = ctx.policy;
    return point;
}

stirling_mode to_mode(stirling::Mode m) {
    switch (m) {
        case stirling::Mode::Engine: return STIRLING_MODE_ENGINE;
        case stirling::Mode::Refrigerator: return STIRLING_MODE_REFRIGERATOR;
        case stirling::Mode::Dud: return STIRLING_MODE_DUD;
    }
    return STIRLING_MODE_DUD;
}

void export_result(const stirling::CycleResult& r, stirling_cycle_result& out) {
    out.q_ab = r.Q_AB;
    out.q_bc = r.Q_BC;
    out.q_cd = r.Q_CD;
    out.q_da = r.Q_DA;
    out.w = r.W;
    out.has_efficiency = r.efficiency.has_value();
    out.efficiency = r.efficiency.value_or(0.0);
    out.has_efficiency_strict = r.efficiency_strict.has_value();
    out.efficiency_strict = r.efficiency_strict.value_or(0.0);
    out.has_cop = r.cop.has_value();
    out.cop = r.cop.value_or(0.0);
    out.mode = to_mode(r.mode);
    out.ln_z_a = r.ln_Z_A;
    out.ln_z_b = r.ln_Z_B;
    out.ln_z_c = r.ln_Z_C;
    out.ln_z_d = r.ln_Z_D;
    out.lambda_hot = r.lambda_hot;
    out.lambda_cold = r.lambda_cold;
    out.first_law_residual = r.first_law_residual;
}

}  // namespace

extern "C" {

const char* stirling_version(void) { return "0.1.0"; }

const char* stirling_last_error(void) { return last_error.c_str(); }

const char* stirling_mode_name(stirling_mode mode) {
    switch (mode) {
        case STIRLING_MODE_ENGINE: return "Engine";
        case STIRLING_MODE_REFRIGERATOR: return "Refrigerator";
        case STIRLING_MODE_DUD: return "Dud";
    }
    return "Unknown";
}

stirling_status stirling_context_create(stirling_context** out) {
    STIRLING_REQUIRE(out != nullptr);
    return guarded([&] { *out = new stirling_context{}; });
}

void stirling_context_destroy(stirling_context* ctx) { delete ctx; }

stirling_status stirling_context_set_constants(stirling_context* ctx, double hbar, double k_b) {
    STIRLING_REQUIRE(ctx != nullptr);
    if (!(hbar > 0.0) || !(k_b > 0.0)) {
        return fail(STIRLING_E_DOMAIN, "constants must be positive");
    }
    ctx->constants = {hbar, k_b};
    last_error.clear();
    return STIRLING_OK;
}

stirling_status stirling_context_set_policy(stirling_context* ctx, double relative_tail_tol,
                                            uint64_t min_terms, uint64_t max_terms) {
    STIRLING_REQUIRE(ctx != nullptr);
    return guarded([&] {
        stirling::SeriesPolicy policy{relative_tail_tol, static_cast<std::size_t>(min_terms),
                                      static_cast<std::size_t>(max_terms)};
        policy.validate();
        ctx->policy = policy;
    });
}

stirling_status stirling_context_boltzmann(const stirling_context* ctx, double* k_b) {
    STIRLING_REQUIRE(ctx != nullptr && k_b != nullptr);
    *k_b = ctx->constants.k_B;
    return STIRLING_OK;
}

stirling_status stirling_spectrum_single(double width_m, stirling_spectrum** out) {
    STIRLING_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = new stirling_spectrum{stirling::SpectrumModel::single_well(width_m)};
    });
}

stirling_status stirling_spectrum_symmetric(double total_width_m, uint32_t parts,
                                            stirling_spectrum** out) {
    STIRLING_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = new stirling_spectrum{stirling::SpectrumModel::symmetric_split(total_width_m, parts)};
    });
}

stirling_status stirling_spectrum_union(const double* widths_m, size_t count,
                                        stirling_spectrum** out) {
    STIRLING_REQUIRE(out != nullptr && (widths_m != nullptr || count == 0));
    return guarded([&] {
        std::vector<double> widths(widths_m, widths_m + count);
        *out = new stirling_spectrum{stirling::SpectrumModel::union_of_wells(std::move(widths))};
    });
}

void stirling_spectrum_destroy(stirling_spectrum* spectrum) { delete spectrum; }

stirling_status stirling_single_well_level(const stirling_context* ctx, double width_m,
                                           double mass_kg, uint64_t n, double* energy) {
    STIRLING_REQUIRE(ctx != nullptr && energy != nullptr);
    return guarded(
        [&] { *energy = stirling::single_well_level(width_m, mass_kg, n, ctx->constants); });
}

stirling_status stirling_enumerate_levels(const stirling_context* ctx,
                                          const stirling_spectrum* spectrum, double mass_kg,
                                          size_t count, stirling_level* out) {
    STIRLING_REQUIRE(ctx != nullptr && spectrum != nullptr && out != nullptr);
    return guarded([&] {
        const auto levels =
            stirling::enumerate_levels(spectrum->model, mass_kg, count, ctx->constants);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            out[i] = {levels[i].energy, levels[i].degeneracy};
        }
    });
}

stirling_status stirling_thermo_state(const stirling_context* ctx,
                                      const stirling_spectrum* spectrum, double mass_kg,
                                      double t_k, stirling_thermo* out) {
    STIRLING_REQUIRE(ctx != nullptr && spectrum != nullptr && out != nullptr);
    return guarded([&] {
        const auto s =
            stirling::thermo_state(spectrum->model, mass_kg, t_k, ctx->policy, ctx->constants);
        *out = {s.temperature,   s.ln_Z,          s.internal_energy,   s.entropy,
                s.heat_capacity, s.free_energy,   s.terms_used,        s.ground_energy,
                s.ground_degeneracy, s.log_shifted_sum, s.excess_energy, s.lambda};
    });
}

stirling_status stirling_two_level_heat_capacity(const stirling_context* ctx, double omega_j,
                                                 double t_k, double* out) {
    STIRLING_REQUIRE(ctx != nullptr && out != nullptr);
    return guarded(
        [&] { *out = stirling::two_level_heat_capacity(omega_j, t_k, ctx->constants); });
}

stirling_status stirling_run_cycle(const stirling_context* ctx, const stirling_point* point,
                                   stirling_cycle_result* out) {
    STIRLING_REQUIRE(ctx != nullptr && point != nullptr && out != nullptr);
    return guarded([&] {
        export_result(stirling::run_cycle(to_point(*ctx, *point), ctx->constants), *out);
    });
}

stirling_status stirling_refrigerator(const stirling_context* ctx, const stirling_point* point,
                                      stirling_cycle_result* out) {
    STIRLING_REQUIRE(ctx != nullptr && point != nullptr && out != nullptr);
    return guarded([&] {
        export_result(stirling::refrigerator_cop(to_point(*ctx, *point), ctx->constants), *out);
    });
}

stirling_status stirling_decompose_work(const stirling_context* ctx, const stirling_point* point,
                                        stirling_work_decomposition* out) {
    STIRLING_REQUIRE(ctx != nullptr && point != nullptr && out != nullptr);
    return guarded([&] {
        const auto d = stirling::decompose_work(to_point(*ctx, *point), ctx->constants);
        *out = {d.mixing_term, d.hot_compression_term, d.cold_expansion_term,
                d.finite_size_correction};
    });
}

stirling_status stirling_low_temperature_limit(const stirling_context* ctx, double t_hot_k,
                                               double t_cold_k, uint32_t parts, double* w,
                                               double* eta) {
    STIRLING_REQUIRE(ctx != nullptr && w != nullptr && eta != nullptr);
    return guarded([&] {
        const auto lim = stirling::low_temperature_limit(t_hot_k, t_cold_k, parts, ctx->constants);
        *w = lim.W;
        *eta = lim.eta;
    });
}

stirling_status stirling_microstate_count(stirling_statistics stats, uint32_t n, uint32_t g,
                                          char* buffer, size_t size, size_t* needed) {
    stirling::ParticleStatistics s;
    STIRLING_REQUIRE(to_statistics(stats, s));
    STIRLING_REQUIRE(buffer != nullptr || size == 0);
    std::string digits;
    const auto status = guarded([&] { digits = stirling::microstate_count(s, n, g).str(); });
    if (status != STIRLING_OK) return status;
    if (needed != nullptr) *needed = digits.size() + 1;
    if (size < digits.size() + 1) {
        return fail(STIRLING_E_INVALID_ARGUMENT, "buffer too small for microstate count");
    }
    std::memcpy(buffer, digits.c_str(), digits.size() + 1);
    return STIRLING_OK;
}

stirling_status stirling_log_microstate_count(stirling_statistics stats, uint32_t n, uint32_t g,
                                              double* out) {
    stirling::ParticleStatistics s;
    STIRLING_REQUIRE(to_statistics(stats, s) && out != nullptr);
    return guarded([&] { *out = stirling::log_count(stirling::microstate_count(s, n, g)); });
}

stirling_status stirling_enumerate_microstates(stirling_statistics stats, uint32_t n, uint32_t g,
                                               uint64_t* out) {
    stirling::ParticleStatistics s;
    STIRLING_REQUIRE(to_statistics(stats, s) && out != nullptr);
    return guarded([&] { *out = stirling::enumerate_microstates(s, n, g); });
}

stirling_status stirling_low_t_work(const stirling_context* ctx, stirling_statistics stats,
                                    uint32_t n, uint32_t g, double t_hot_k, double t_cold_k,
                                    double* out) {
    stirling::ParticleStatistics s;
    STIRLING_REQUIRE(ctx != nullptr && to_statistics(stats, s) && out != nullptr);
    return guarded(
        [&] { *out = stirling::low_T_work(s, n, g, t_hot_k, t_cold_k, ctx->constants); });
}

}  // extern "C"
