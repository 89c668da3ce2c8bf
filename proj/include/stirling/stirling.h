/*
 * C interface to the degeneracy-driven quantum Stirling cycle library.
 *
 * All functions return a stirling_status. On failure the thread-local
 * message from stirling_last_error() describes the cause. Output structs are
 * only written on STIRLING_OK. Lengths are metres, temperatures kelvin,
 * energies joules.
 *
 * A stirling_context holds the physical constants and the series policy. It
 * is immutable while computations run, so one context may be shared by many
 * threads as long as no setter is called concurrently.
 */
#ifndef STIRLING_STIRLING_H
#define STIRLING_STIRLING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STIRLING_BUILDING_LIBRARY)
#    define STIRLING_API __declspec(dllexport)
#  else
#    define STIRLING_API __declspec(dllimport)
#  endif
#else
#  define STIRLING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stirling_status {
    STIRLING_OK = 0,
    STIRLING_E_INVALID_ARGUMENT = 1, /* null pointer, bad enum, buffer too small */
    STIRLING_E_DOMAIN = 2,           /* physically invalid input */
    STIRLING_E_SERIES_CAP = 3,       /* level sum did not converge within max_terms */
    STIRLING_E_UNSUPPORTED = 4,      /* e.g. decomposition of an asymmetric cycle */
    STIRLING_E_INTERNAL = 5
} stirling_status;

typedef enum stirling_mode {
    STIRLING_MODE_ENGINE = 0,
    STIRLING_MODE_REFRIGERATOR = 1,
    STIRLING_MODE_DUD = 2
} stirling_mode;

typedef enum stirling_partition_kind {
    STIRLING_PARTITION_SYMMETRIC = 0,  /* parts equal wells */
    STIRLING_PARTITION_ASYMMETRIC = 1  /* one barrier, offset from the centre */
} stirling_partition_kind;

typedef enum stirling_statistics {
    STIRLING_STATS_DISTINGUISHABLE = 0,
    STIRLING_STATS_BOSON = 1,
    STIRLING_STATS_FERMION = 2
} stirling_statistics;

typedef struct stirling_context stirling_context;
typedef struct stirling_spectrum stirling_spectrum;

typedef struct stirling_point {
    double half_width_m;
    double mass_kg;
    stirling_partition_kind partition;
    uint32_t parts;     /* symmetric: number of wells N (N-1 barriers) */
    double offset_m;    /* asymmetric: barrier offset eps */
    double t_hot_k;
    double t_cold_k;
} stirling_point;

typedef struct stirling_cycle_result {
    double q_ab, q_bc, q_cd, q_da;
    double w;
    int has_efficiency;
    double efficiency;
    int has_efficiency_strict;
    double efficiency_strict;
    int has_cop;
    double cop;
    stirling_mode mode;
    double ln_z_a, ln_z_b, ln_z_c, ln_z_d;
    double lambda_hot, lambda_cold;
    double first_law_residual;
} stirling_cycle_result;

typedef struct stirling_work_decomposition {
    double mixing_term;
    double hot_compression_term;
    double cold_expansion_term;
    double finite_size_correction;
} stirling_work_decomposition;

typedef struct stirling_level {
    double energy;
    uint64_t degeneracy;
} stirling_level;

typedef struct stirling_thermo {
    double temperature;
    double ln_z;
    double internal_energy;
    double entropy;
    double heat_capacity;
    double free_energy;
    uint64_t terms_used;
    double ground_energy;
    uint64_t ground_degeneracy;
    double log_shifted_sum;
    double excess_energy;
    double lambda;
} stirling_thermo;

STIRLING_API const char* stirling_version(void);
STIRLING_API const char* stirling_last_error(void);
STIRLING_API const char* stirling_mode_name(stirling_mode mode);

STIRLING_API stirling_status stirling_context_create(stirling_context** out);
STIRLING_API void stirling_context_destroy(stirling_context* ctx);
STIRLING_API stirling_status stirling_context_set_constants(stirling_context* ctx, double hbar,
                                                            double k_b);
STIRLING_API stirling_status stirling_context_set_policy(stirling_context* ctx,
                                                         double relative_tail_tol,
                                                         uint64_t min_terms, uint64_t max_terms);
STIRLING_API stirling_status stirling_context_boltzmann(const stirling_context* ctx, double* k_b);

/* Spectra */
STIRLING_API stirling_status stirling_spectrum_single(double width_m, stirling_spectrum** out);
STIRLING_API stirling_status stirling_spectrum_symmetric(double total_width_m, uint32_t parts,
                                                         stirling_spectrum** out);
STIRLING_API stirling_status stirling_spectrum_union(const double* widths_m, size_t count,
                                                     stirling_spectrum** out);
STIRLING_API void stirling_spectrum_destroy(stirling_spectrum* spectrum);
STIRLING_API stirling_status stirling_single_well_level(const stirling_context* ctx,
                                                        double width_m, double mass_kg,
                                                        uint64_t n, double* energy);
STIRLING_API stirling_status stirling_enumerate_levels(const stirling_context* ctx,
                                                       const stirling_spectrum* spectrum,
                                                       double mass_kg, size_t count,
                                                       stirling_level* out);

/* Canonical thermodynamics */
STIRLING_API stirling_status stirling_thermo_state(const stirling_context* ctx,
                                                   const stirling_spectrum* spectrum,
                                                   double mass_kg, double t_k,
                                                   stirling_thermo* out);
STIRLING_API stirling_status stirling_two_level_heat_capacity(const stirling_context* ctx,
                                                              double omega_j, double t_k,
                                                              double* out);

/* Cycle */
STIRLING_API stirling_status stirling_run_cycle(const stirling_context* ctx,
                                                const stirling_point* point,
                                                stirling_cycle_result* out);
STIRLING_API stirling_status stirling_refrigerator(const stirling_context* ctx,
                                                   const stirling_point* point,
                                                   stirling_cycle_result* out);
STIRLING_API stirling_status stirling_decompose_work(const stirling_context* ctx,
                                                     const stirling_point* point,
                                                     stirling_work_decomposition* out);
STIRLING_API stirling_status stirling_low_temperature_limit(const stirling_context* ctx,
                                                            double t_hot_k, double t_cold_k,
                                                            uint32_t parts, double* w,
                                                            double* eta);

/* Particle statistics. The count is written as a NUL-terminated decimal
 * string; *needed receives the buffer size required (including NUL). */
STIRLING_API stirling_status stirling_microstate_count(stirling_statistics stats, uint32_t n,
                                                       uint32_t g, char* buffer, size_t size,
                                                       size_t* needed);
STIRLING_API stirling_status stirling_log_microstate_count(stirling_statistics stats,
                                                           uint32_t n, uint32_t g,
                                                           double* out);
STIRLING_API stirling_status stirling_enumerate_microstates(stirling_statistics stats,
                                                            uint32_t n, uint32_t g,
                                                            uint64_t* out);
STIRLING_API stirling_status stirling_low_t_work(const stirling_context* ctx,
                                                 stirling_statistics stats, uint32_t n,
                                                 uint32_t g, double t_hot_k, double t_cold_k,
                                                 double* out);

#ifdef __cplusplus
}
#endif

#endif /* STIRLING_STIRLING_H */
