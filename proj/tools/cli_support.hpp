// Shared pieces of the stirling command-line tool. Everything here talks to
// the library through the C interface only.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirling_cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_bad_arguments = 2;
inline constexpr int exit_numerical_failure = 3;

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Parses "start:stop:count" or "start:stop:count:log" (also ":lin").
/// count == 0 yields an empty grid; count == 1 yields {start}.
std::vector<double> parse_grid(std::string_view text);

/// Parses a comma-separated list of non-negative numbers.
std::vector<double> parse_list(std::string_view text);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Reads "key = value" lines ('#' starts a comment) into command-line tokens
/// "--key value" so that flags given afterwards take precedence.
std::vector<std::string> config_tokens(const std::string& path);

struct RunConfig {
    double mass_kg = 9.11e-31;
    double t_hot_k = 2.0;
    double t_cold_k = 1.0;
    std::uint32_t barriers = 1;
    std::optional<double> tol;
    std::optional<std::uint64_t> min_terms;
    std::optional<std::uint64_t> max_terms;
    std::vector<double> a_nm;    // explicit values, or filled from the grid
    std::vector<double> eps_nm{0.0};
    std::optional<std::string> grid;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> out_path;
    unsigned workers = 1;
};

/// The a values to evaluate: the grid when given, else the explicit list.
std::vector<double> a_values(const RunConfig& config);

int cmd_cycle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_refrigerator(const RunConfig& config, std::ostream& out, std::ostream& err);

struct ParticleQuery {
    std::string stats = "distinguishable";
    std::uint32_t n = 2;
    std::uint32_t g = 1;
    bool all = false;
};

int cmd_particles(const RunConfig& config, const ParticleQuery& query, std::ostream& out,
                  std::ostream& err);

inline constexpr std::string_view sweep_header =
    "a_nm,eps_nm,Th_K,Tc_K,Q_AB_J,Q_BC_J,Q_CD_J,Q_DA_J,W_J,W_over_kTc,eta,mode";
inline constexpr std::string_view refrigerator_header =
    "a_nm,eps_nm,Th_K,Tc_K,Q_AB_J,Q_BC_J,Q_CD_J,Q_DA_J,W_J,W_over_kTc,cop,mode,crossover";
inline constexpr std::string_view particles_header = "stats,n,g,count,ln_count,work_J,W_over_kdT";

}  // namespace stirling_cli
