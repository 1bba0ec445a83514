#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "partasym/errors.hpp"
#include "partasym/exact_count.hpp"
#include "partasym/limits.hpp"
#include "partasym/saddle.hpp"
#include "partasym/sweep.hpp"

namespace partasym {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ModelKind model_from_flag(const std::string& name) {
    if (name == "unrestricted") return ModelKind::unrestricted;
    if (name == "distinct") return ModelKind::distinct;
    if (name == "bounded" || name == "bounded-distinct") return ModelKind::bounded_distinct;
    throw std::invalid_argument("unknown model '" + name + "'");
}

LimitKind limit_from_flag(const std::string& name) {
    if (name == "none") return LimitKind::none;
    if (name == "mb") return LimitKind::mb;
    if (name == "erdos") return LimitKind::erdos;
    if (name == "szekeres") return LimitKind::szekeres;
    if (name == "total") return LimitKind::total;
    throw std::invalid_argument("unknown limit '" + name + "'");
}

std::vector<std::int64_t> ints_from_flag(const std::string& field, const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoll(item));
    if (out.empty()) throw std::invalid_argument(field + ": empty list");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << text;
}

int run_exact(const std::string& model_name, std::int64_t E,
              std::optional<std::int64_t> N, std::optional<std::int64_t> B) {
    BigCount count;
    if (model_name == "total") {
        count = count_distinct_total(E);
    } else {
        const ModelKind model = model_from_flag(model_name);
        if (!N) throw std::invalid_argument("--N is required for this model");
        switch (model) {
        case ModelKind::unrestricted: count = count_unrestricted_max_parts(E, *N); break;
        case ModelKind::distinct: count = count_distinct(E, *N); break;
        case ModelKind::bounded_distinct:
            if (!B) throw std::invalid_argument("--B is required for the bounded model");
            count = count_distinct_bounded(E, *N, *B);
            break;
        }
    }
    std::cout << count.str() << "\n";
    std::cout << "ln = " << fmt(count.ln_value()) << "\n";
    return 0;
}

int run_asym(const std::string& model_name, std::int64_t E, std::int64_t N,
             std::optional<std::int64_t> B) {
    const ModelKind model = model_from_flag(model_name);
    const SaddleSolution sol = solve_saddle(model, E, N, B);
    const AsymptoticEstimate est = estimate(model, E, N, B);
    std::cout << "ln_value = " << fmt(est.ln_value) << "\n";
    std::cout << "g_term = " << fmt(est.g_term) << "\n";
    std::cout << "f_term = " << fmt(est.f_term) << "\n";
    std::cout << "v = " << fmt(sol.v) << "\n";
    std::cout << "u = " << fmt(sol.u) << "\n";
    if (sol.w) std::cout << "w = " << fmt(*sol.w) << "\n";
    if (sol.p) std::cout << "p = " << fmt(*sol.p) << "\n";
    std::cout << "decimal_digits = " << fmt(est.decimal_digits()) << "\n";
    return 0;
}

int run_limits(std::int64_t E, std::int64_t N, std::optional<std::int64_t> B) {
    std::cout << "mb = " << fmt(mb_limit_ln_q(E, N)) << "\n";
    std::cout << "erdos = " << fmt(erdos_ln_q(E, N)) << "\n";
    std::cout << "total = " << fmt(total_distinct_ln_q(E)) << "\n";
    if (B) std::cout << "szekeres = " << fmt(szekeres_bounded_ln_q(E, N, *B)) << "\n";
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"exact and asymptotic counting of integer partitions"};
    app.require_subcommand(1);

    std::string model_name = "distinct";
    std::string limit_name = "none";
    std::int64_t arg_e = 0;
    std::int64_t arg_n = 0, arg_b = 0;
    bool has_n = false, has_b = false;

    auto add_query_flags = [&](CLI::App* cmd, bool need_n) {
        cmd->add_option("--model", model_name, "unrestricted|distinct|bounded");
        cmd->add_option("--E", arg_e, "energy (integer being partitioned)")->required();
        auto* n = cmd->add_option("--N", arg_n, "number of parts");
        if (need_n) n->required();
        n->each([&](const std::string&) { has_n = true; });
        cmd->add_option("--B", arg_b, "maximum part size (bounded model)")
            ->each([&](const std::string&) { has_b = true; });
    };

    auto* cmd_exact = app.add_subcommand("exact", "exact count via dynamic programming");
    add_query_flags(cmd_exact, false);

    auto* cmd_asym = app.add_subcommand("asym", "saddle-point asymptotic estimate");
    add_query_flags(cmd_asym, true);

    auto* cmd_limits = app.add_subcommand("limits", "closed-form limit formulas");
    cmd_limits->add_option("--E", arg_e, "energy")->required();
    cmd_limits->add_option("--N", arg_n, "number of parts")->required();
    cmd_limits->add_option("--B", arg_b, "maximum part size")
        ->each([&](const std::string&) { has_b = true; });

    auto* cmd_compare = app.add_subcommand("compare", "one exact-vs-asymptotic row");
    add_query_flags(cmd_compare, true);
    std::int64_t exact_cap = -1;
    cmd_compare->add_option("--limit", limit_name, "none|mb|erdos|szekeres|total");
    cmd_compare->add_option("--exact-cap", exact_cap, "skip exact counting above this E");

    auto* cmd_sweep = app.add_subcommand("sweep", "exact-vs-asymptotic parameter sweep");
    std::string config_path, e_list, n_list, b_list, format_name = "csv", out_path;
    double u_target = 0.0, b_ratio = 0.0;
    bool sigma_zero = false;
    bool has_u = false, has_ratio = false;
    cmd_sweep->add_option("--config", config_path, "key=value config file");
    cmd_sweep->add_option("--model", model_name, "unrestricted|distinct|bounded");
    cmd_sweep->add_option("--E", e_list, "comma-separated energies");
    cmd_sweep->add_option("--N", n_list, "comma-separated part counts");
    cmd_sweep->add_option("--u", u_target, "N = round(u sqrt(E))")
        ->each([&](const std::string&) { has_u = true; });
    cmd_sweep->add_flag("--sigma-zero", sigma_zero, "N = round(sqrt(E) ln2 / c)");
    cmd_sweep->add_option("--B", b_list, "comma-separated part bounds");
    cmd_sweep->add_option("--b-ratio", b_ratio, "B = round(r sqrt(E))")
        ->each([&](const std::string&) { has_ratio = true; });
    cmd_sweep->add_option("--format", format_name, "csv|json");
    cmd_sweep->add_option("--limit", limit_name, "none|mb|erdos|szekeres|total");
    cmd_sweep->add_option("--exact-cap", exact_cap, "skip exact counting above this E");
    cmd_sweep->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);

        std::optional<std::int64_t> opt_n, opt_b;
        if (has_n) opt_n = arg_n;
        if (has_b) opt_b = arg_b;

        if (cmd_exact->parsed()) return run_exact(model_name, arg_e, opt_n, opt_b);
        if (cmd_asym->parsed()) return run_asym(model_name, arg_e, arg_n, opt_b);
        if (cmd_limits->parsed()) return run_limits(arg_e, arg_n, opt_b);

        if (cmd_compare->parsed()) {
            const ModelKind model = model_from_flag(model_name);
            const std::int64_t cap = exact_cap >= 0 ? exact_cap : default_exact_cap(model);
            const ComparisonRow row =
                compare_cell(model, arg_e, arg_n, opt_b, limit_from_flag(limit_name), cap);
            std::cout << rows_to_csv({row});
            return 0;
        }

        // sweep
        SweepSpec spec;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw config_error("cannot open config file '" + config_path + "'");
            spec = parse_sweep_config(in);
        } else {
            spec.model = model_from_flag(model_name);
            if (e_list.empty()) throw config_error("E: missing");
            spec.e_values = ints_from_flag("E", e_list);
            int n_rules = 0;
            if (!n_list.empty()) {
                spec.n_rule = NRule::explicit_list;
                spec.n_values = ints_from_flag("N", n_list);
                ++n_rules;
            }
            if (has_u) {
                spec.n_rule = NRule::fixed_u;
                spec.u_target = u_target;
                ++n_rules;
            }
            if (sigma_zero) {
                spec.n_rule = NRule::sigma_zero;
                ++n_rules;
            }
            if (n_rules != 1)
                throw config_error("exactly one of --N, --u, --sigma-zero is required");
            if (!b_list.empty()) {
                spec.b_rule = BRule::explicit_list;
                spec.b_values = ints_from_flag("B", b_list);
            } else if (has_ratio) {
                spec.b_rule = BRule::fixed_ratio;
                spec.b_ratio = b_ratio;
            }
            if (format_name == "csv") spec.format = OutputFormat::csv;
            else if (format_name == "json") spec.format = OutputFormat::json;
            else throw config_error("format: expected csv|json, got '" + format_name + "'");
            spec.limit = limit_from_flag(limit_name);
            spec.exact_cap = exact_cap;
        }

        const std::vector<ComparisonRow> rows = run_sweep(spec);
        emit(spec.format == OutputFormat::csv ? rows_to_csv(rows) : rows_to_json(rows),
             out_path);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const feasibility_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace partasym
