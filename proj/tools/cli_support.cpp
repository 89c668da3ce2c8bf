#include "cli_support.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stirling/stirling.h"

namespace stirling_cli {

namespace {

using json = nlohmann::ordered_json;

double parse_number(std::string_view text, const char* what) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw UsageError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

struct ContextDeleter {
    void operator()(stirling_context* ctx) const { stirling_context_destroy(ctx); }
};
using Context = std::unique_ptr<stirling_context, ContextDeleter>;

Context make_context(const RunConfig& config) {
    stirling_context* raw = nullptr;
    if (stirling_context_create(&raw) != STIRLING_OK) {
        throw std::runtime_error(stirling_last_error());
    }
    Context ctx(raw);
    if (config.tol || config.min_terms || config.max_terms) {
        const double tol = config.tol.value_or(1e-16);
        const std::uint64_t lo = config.min_terms.value_or(8);
        const std::uint64_t hi = config.max_terms.value_or(10'000'000);
        if (stirling_context_set_policy(ctx.get(), tol, lo, hi) != STIRLING_OK) {
            throw UsageError(stirling_last_error());
        }
    }
    return ctx;
}

double boltzmann(const stirling_context* ctx) {
    double k_b = 0;
    stirling_context_boltzmann(ctx, &k_b);
    return k_b;
}

void check_config(const RunConfig& config) {
    if (!(config.mass_kg > 0.0)) throw UsageError("--mass-kg must be positive");
    if (!(config.t_hot_k > 0.0) || !(config.t_cold_k > 0.0)) {
        throw UsageError("temperatures must be positive");
    }
    if (config.t_hot_k < config.t_cold_k) {
        throw UsageError("--th-k must not be below --tc-k");
    }
    if (config.workers == 0) throw UsageError("--workers must be >= 1");
    for (double eps : config.eps_nm) {
        if (eps > 0.0 && config.barriers != 1) {
            throw UsageError("an offset barrier (--eps-nm > 0) needs --barriers 1");
        }
    }
}

stirling_point make_point(const RunConfig& config, double a_nm, double eps_nm) {
    stirling_point p{};
    p.half_width_m = a_nm * 1e-9;
    p.mass_kg = config.mass_kg;
    if (eps_nm > 0.0) {
        p.partition = STIRLING_PARTITION_ASYMMETRIC;
        p.offset_m = eps_nm * 1e-9;
        p.parts = 2;
    } else {
        p.partition = STIRLING_PARTITION_SYMMETRIC;
        p.parts = config.barriers + 1;
    }
    p.t_hot_k = config.t_hot_k;
    p.t_cold_k = config.t_cold_k;
    return p;
}

struct Row {
    double a_nm = 0;
    double eps_nm = 0;
    bool ok = false;
    stirling_cycle_result result{};
    std::string error;
};

// Evaluates every (eps, a) pair, eps outer, a inner. Workers pull indices
// from a shared counter; rows land in their grid slot so output order does
// not depend on scheduling.
std::vector<Row> evaluate(const RunConfig& config, const stirling_context* ctx, bool refrigerator) {
    const auto as = a_values(config);
    std::vector<Row> rows;
    rows.reserve(as.size() * config.eps_nm.size());
    for (double eps : config.eps_nm) {
        for (double a : as) rows.push_back({a, eps, false, {}, {}});
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            Row& row = rows[i];
            const auto point = make_point(config, row.a_nm, row.eps_nm);
            const auto status = refrigerator ? stirling_refrigerator(ctx, &point, &row.result)
                                             : stirling_run_cycle(ctx, &point, &row.result);
            row.ok = status == STIRLING_OK;
            if (!row.ok) row.error = stirling_last_error();
        }
    };

    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(config.workers, std::max<std::size_t>(rows.size(), 1)));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
    }
    return rows;
}

std::string opt(int has, double value) { return has ? format_double(value) : std::string{}; }

json opt_json(int has, double value) { return has ? json(value) : json(nullptr); }

int report_failures(const std::vector<Row>& rows, std::ostream& err) {
    int code = exit_ok;
    for (const auto& row : rows) {
        if (!row.ok) {
            err << "error at a=" << format_double(row.a_nm) << " nm, eps="
                << format_double(row.eps_nm) << " nm: " << row.error << '\n';
            code = exit_numerical_failure;
        }
    }
    return code;
}

std::vector<int> crossover_flags(const std::vector<Row>& rows) {
    std::vector<int> flags(rows.size(), 0);
    bool seen_fridge = false;
    bool flagged = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i].eps_nm != rows[i - 1].eps_nm) seen_fridge = flagged = false;
        if (!rows[i].ok) continue;
        if (rows[i].result.mode == STIRLING_MODE_REFRIGERATOR) seen_fridge = true;
        if (rows[i].result.mode == STIRLING_MODE_ENGINE && seen_fridge && !flagged) {
            flags[i] = 1;
            flagged = true;
        }
    }
    return flags;
}

void emit_rows(const RunConfig& config, const std::vector<Row>& rows, double k_b,
               bool refrigerator, std::ostream& out) {
    const auto flags = refrigerator ? crossover_flags(rows) : std::vector<int>(rows.size(), 0);
    const double kTc = k_b * config.t_cold_k;

    if (config.format == OutputFormat::Json) {
        json arr = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            const auto& r = row.result;
            json o;
            o["a_nm"] = row.a_nm;
            o["eps_nm"] = row.eps_nm;
            o["Th_K"] = config.t_hot_k;
            o["Tc_K"] = config.t_cold_k;
            if (row.ok) {
                o["Q_AB_J"] = r.q_ab;
                o["Q_BC_J"] = r.q_bc;
                o["Q_CD_J"] = r.q_cd;
                o["Q_DA_J"] = r.q_da;
                o["W_J"] = r.w;
                o["W_over_kTc"] = r.w / kTc;
                if (refrigerator) {
                    o["cop"] = opt_json(r.has_cop, r.cop);
                } else {
                    o["eta"] = opt_json(r.has_efficiency, r.efficiency);
                }
                o["mode"] = stirling_mode_name(r.mode);
            } else {
                for (const char* key : {"Q_AB_J", "Q_BC_J", "Q_CD_J", "Q_DA_J", "W_J", "W_over_kTc"}) {
                    o[key] = nullptr;
                }
                o[refrigerator ? "cop" : "eta"] = nullptr;
                o["mode"] = "ERROR";
            }
            if (refrigerator) o["crossover"] = flags[i];
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << '\n';
        return;
    }

    out << (refrigerator ? refrigerator_header : sweep_header) << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& r = row.result;
        out << format_double(row.a_nm) << ',' << format_double(row.eps_nm) << ','
            << format_double(config.t_hot_k) << ',' << format_double(config.t_cold_k) << ',';
        if (row.ok) {
            out << format_double(r.q_ab) << ',' << format_double(r.q_bc) << ','
                << format_double(r.q_cd) << ',' << format_double(r.q_da) << ','
                << format_double(r.w) << ',' << format_double(r.w / kTc) << ','
                << (refrigerator ? opt(r.has_cop, r.cop) : opt(r.has_efficiency, r.efficiency))
                << ',' << stirling_mode_name(r.mode);
        } else {
            out << ",,,,,,,ERROR";
        }
        if (refrigerator) out << ',' << flags[i];
        out << '\n';
    }
}

int run_grid(const RunConfig& config, std::ostream& out, std::ostream& err, bool refrigerator) {
    check_config(config);
    const auto ctx = make_context(config);
    const auto rows = evaluate(config, ctx.get(), refrigerator);
    emit_rows(config, rows, boltzmann(ctx.get()), refrigerator, out);
    return report_failures(rows, err);
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) {
        throw UsageError("grid must be start:stop:count[:log]");
    }
    const double start = parse_number(parts[0], "grid start");
    const double stop = parse_number(parts[1], "grid stop");
    const double count_d = parse_number(parts[2], "grid count");
    if (count_d < 0 || count_d != std::floor(count_d) || count_d > 1e7) {
        throw UsageError("grid count must be a non-negative integer");
    }
    bool log_spacing = false;
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            log_spacing = true;
        } else if (parts[3] != "lin") {
            throw UsageError("grid spacing must be 'log' or 'lin'");
        }
    }
    if (!(start > 0.0) || !(stop > 0.0)) throw UsageError("grid values must be positive");

    const auto count = static_cast<std::size_t>(count_d);
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i + 1 == count && count > 1) {
            values.push_back(stop);  // land exactly on the end point
            break;
        }
        const double t = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
        values.push_back(log_spacing ? start * std::pow(stop / start, t)
                                     : start + (stop - start) * t);
    }
    return values;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> values;
    for (auto item : split(text, ',')) {
        const double v = parse_number(item, "list value");
        if (v < 0.0) throw UsageError("list values must be non-negative");
        values.push_back(v);
    }
    return values;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::replace(key.begin(), key.end(), '_', '-');
        if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
        tokens.push_back("--" + key);
        if (value != "true") tokens.push_back(value);
    }
    return tokens;
}

std::vector<double> a_values(const RunConfig& config) {
    return config.grid ? parse_grid(*config.grid) : config.a_nm;
}

int cmd_cycle(const RunConfig& config, std::ostream& out, std::ostream& err) {
    check_config(config);
    const auto as = a_values(config);
    if (as.size() != 1 || config.eps_nm.size() != 1) {
        throw UsageError("cycle evaluates one point: give exactly one --a-nm and --eps-nm");
    }
    const auto ctx = make_context(config);
    const double k_b = boltzmann(ctx.get());
    const auto point = make_point(config, as.front(), config.eps_nm.front());
    stirling_cycle_result r{};
    if (stirling_run_cycle(ctx.get(), &point, &r) != STIRLING_OK) {
        err << "cycle failed: " << stirling_last_error() << '\n';
        return exit_numerical_failure;
    }

    const std::vector<std::pair<std::string, std::string>> fields = {
        {"a_nm", format_double(as.front())},
        {"eps_nm", format_double(config.eps_nm.front())},
        {"barriers", std::to_string(config.barriers)},
        {"Th_K", format_double(config.t_hot_k)},
        {"Tc_K", format_double(config.t_cold_k)},
        {"Q_AB_J", format_double(r.q_ab)},
        {"Q_BC_J", format_double(r.q_bc)},
        {"Q_CD_J", format_double(r.q_cd)},
        {"Q_DA_J", format_double(r.q_da)},
        {"W_J", format_double(r.w)},
        {"W_over_kTc", format_double(r.w / (k_b * config.t_cold_k))},
        {"eta", opt(r.has_efficiency, r.efficiency)},
        {"eta_strict", opt(r.has_efficiency_strict, r.efficiency_strict)},
        {"cop", opt(r.has_cop, r.cop)},
        {"mode", stirling_mode_name(r.mode)},
        {"ln_Z_A", format_double(r.ln_z_a)},
        {"ln_Z_B", format_double(r.ln_z_b)},
        {"ln_Z_C", format_double(r.ln_z_c)},
        {"ln_Z_D", format_double(r.ln_z_d)},
        {"lambda_h", format_double(r.lambda_hot)},
        {"lambda_c", format_double(r.lambda_cold)},
        {"first_law_residual_J", format_double(r.first_law_residual)},
    };

    if (config.format == OutputFormat::Json) {
        json o;
        for (const auto& [key, value] : fields) {
            if (key == "mode") {
                o[key] = value;
            } else if (value.empty()) {
                o[key] = nullptr;
            } else if (key == "barriers") {
                o[key] = config.barriers;
            } else {
                o[key] = std::stod(value);
            }
        }
        out << o.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
        out << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
        out << '\n';
    }
    return exit_ok;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_grid(config, out, err, false);
}

int cmd_refrigerator(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_grid(config, out, err, true);
}

int cmd_particles(const RunConfig& config, const ParticleQuery& query, std::ostream& out,
                  std::ostream& err) {
    if (!(config.t_cold_k > 0.0) || !(config.t_hot_k > config.t_cold_k)) {
        throw UsageError("particle work needs --th-k > --tc-k > 0");
    }
    struct Case {
        stirling_statistics stats;
        std::uint32_t n, g;
    };
    std::vector<Case> cases;
    if (query.all) {
        // Two- then three-particle tables; within each, one barrier then two.
        for (std::uint32_t n : {2u, 3u}) {
            for (std::uint32_t g : {1u, 2u}) {
                for (auto s : {STIRLING_STATS_DISTINGUISHABLE, STIRLING_STATS_BOSON,
                               STIRLING_STATS_FERMION}) {
                    cases.push_back({s, n, g});
                }
            }
        }
    } else {
        stirling_statistics s;
        if (query.stats == "distinguishable") {
            s = STIRLING_STATS_DISTINGUISHABLE;
        } else if (query.stats == "boson") {
            s = STIRLING_STATS_BOSON;
        } else if (query.stats == "fermion") {
            s = STIRLING_STATS_FERMION;
        } else {
            throw UsageError("--stats must be distinguishable, boson or fermion");
        }
        cases.push_back({s, query.n, query.g});
    }

    const auto ctx = make_context(config);
    static constexpr const char* names[] = {"distinguishable", "boson", "fermion"};
    json arr = json::array();
    std::ostringstream csv;
    csv << particles_header << '\n';
    for (const auto& c : cases) {
        size_t needed = 0;
        stirling_microstate_count(c.stats, c.n, c.g, nullptr, 0, &needed);
        if (needed == 0) {
            err << "particles failed: " << stirling_last_error() << '\n';
            return exit_bad_arguments;
        }
        std::string count(needed, '\0');
        double ln_count = 0;
        double work = 0;
        if (stirling_microstate_count(c.stats, c.n, c.g, count.data(), count.size(), &needed) !=
                STIRLING_OK ||
            stirling_log_microstate_count(c.stats, c.n, c.g, &ln_count) != STIRLING_OK ||
            stirling_low_t_work(ctx.get(), c.stats, c.n, c.g, config.t_hot_k, config.t_cold_k,
                                &work) != STIRLING_OK) {
            err << "particles failed: " << stirling_last_error() << '\n';
            return exit_bad_arguments;
        }
        count.resize(needed - 1);
        const char* name = names[c.stats];
        csv << name << ',' << c.n << ',' << c.g << ',' << count << ',' << format_double(ln_count)
            << ',' << format_double(work) << ',' << format_double(ln_count) << '\n';
        json o;
        o["stats"] = name;
        o["n"] = c.n;
        o["g"] = c.g;
        o["count"] = count;
        o["ln_count"] = ln_count;
        o["work_J"] = work;
        o["W_over_kdT"] = ln_count;
        arr.push_back(std::move(o));
    }
    if (config.format == OutputFormat::Json) {
        out << arr.dump(2) << '\n';
    } else {
        out << csv.str();
    }
    return exit_ok;
}

}  // namespace stirling_cli
