// stirling: evaluate the barrier-insertion Stirling cycle from the command line.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"

namespace {

using namespace stirling_cli;

void add_common(CLI::App& cmd, RunConfig& config, std::string& a_list, std::string& eps_list,
                std::string& format) {
    cmd.add_option("--mass-kg", config.mass_kg, "Particle mass in kg")->capture_default_str();
    cmd.add_option("--th-k", config.t_hot_k, "Hot bath temperature in K")->capture_default_str();
    cmd.add_option("--tc-k", config.t_cold_k, "Cold bath temperature in K")->capture_default_str();
    cmd.add_option("--barriers", config.barriers, "Number of equispaced barriers (N-1)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--tol", config.tol, "Relative tail tolerance of the level sums");
    cmd.add_option("--min-terms", config.min_terms, "Minimum number of levels summed");
    cmd.add_option("--max-terms", config.max_terms, "Series cap");
    cmd.add_option("--a-nm", a_list, "Half width a in nm (comma-separated list allowed)");
    cmd.add_option("--eps-nm", eps_list, "Barrier offset(s) in nm, comma-separated")
        ->capture_default_str();
    cmd.add_option("--grid", config.grid, "a grid start:stop:count[:log] in nm");
    cmd.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--out", config.out_path, "Write output to this file instead of stdout");
    cmd.add_option("--workers", config.workers, "Concurrent sweep workers")->capture_default_str();
}

// Moves config-file tokens in right after the subcommand name so explicit
// flags, which follow, win.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    std::vector<std::string> injected;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a path");
            injected = config_tokens(args[++i]);
        } else if (args[i].rfind("--config=", 0) == 0) {
            injected = config_tokens(args[i].substr(9));
        } else {
            out.push_back(args[i]);
        }
    }
    if (!injected.empty() && !out.empty()) {
        out.insert(out.begin() + 1, injected.begin(), injected.end());
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Stirling cycle driven by level degeneracy", "stirling"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_version_flag("--version", "stirling 0.1.0");

    RunConfig config;
    ParticleQuery query;
    std::string a_list;
    std::string eps_list = "0";
    std::string format = "csv";

    auto* cycle = app.add_subcommand("cycle", "Evaluate one cycle point");
    auto* sweep = app.add_subcommand("sweep", "Sweep a (and eps), one CSV row per point");
    auto* fridge = app.add_subcommand("refrigerator", "Reversed cycle: COP and mode per point");
    auto* particles = app.add_subcommand("particles", "Low-temperature multi-particle work");
    for (auto* cmd : {cycle, sweep, fridge, particles}) {
        add_common(*cmd, config, a_list, eps_list, format);
    }
    particles->add_option("--stats", query.stats, "distinguishable | boson | fermion")
        ->capture_default_str();
    particles->add_option("-n,--particles", query.n, "Particle count")->capture_default_str();
    particles->add_option("-g,--partitions", query.g, "Barrier count g")->capture_default_str();
    particles->add_flag("--all", query.all, "Tabulate n = 2, 3 and g = 1, 2 for all statistics");
    particles->get_option("--barriers")->description("Unused by this subcommand");

    try {
        auto args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_arguments;
    } catch (const UsageError& e) {
        std::cerr << "stirling: " << e.what() << '\n';
        return exit_bad_arguments;
    }

    try {
        config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        if (!a_list.empty()) config.a_nm = parse_list(a_list);
        config.eps_nm = parse_list(eps_list);

        std::ofstream file;
        if (config.out_path) {
            file.open(*config.out_path, std::ios::binary);
            if (!file) throw UsageError("cannot open output file '" + *config.out_path + "'");
        }
        std::ostream& out = config.out_path ? static_cast<std::ostream&>(file) : std::cout;

        int code = exit_ok;
        if (*cycle) {
            code = cmd_cycle(config, out, std::cerr);
        } else if (*sweep) {
            if (!config.grid && config.a_nm.empty()) throw UsageError("sweep needs --grid or --a-nm");
            code = cmd_sweep(config, out, std::cerr);
        } else if (*fridge) {
            if (!config.grid && config.a_nm.empty()) {
                throw UsageError("refrigerator needs --grid or --a-nm");
            }
            code = cmd_refrigerator(config, out, std::cerr);
        } else {
            code = cmd_particles(config, query, out, std::cerr);
        }
        out.flush();
        return code;
    } catch (const UsageError& e) {
        std::cerr << "stirling: " << e.what() << '\n';
        return exit_bad_arguments;
    } catch (const std::exception& e) {
        std::cerr << "stirling: " << e.what() << '\n';
        return exit_numerical_failure;
    }
}
