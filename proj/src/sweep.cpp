#include "partasym/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "partasym/errors.hpp"
#include "partasym/exact_count.hpp"
#include "partasym/limits.hpp"

namespace partasym {

namespace {

using std::int64_t;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// The multiset of partitions is empty outside these bounds; the count is 0
// there without any DP work.
bool support_empty(ModelKind model, int64_t E, int64_t N,
                   const std::optional<int64_t>& B) {
    const __int128 e_min = (__int128)N * (N + 1) / 2;
    switch (model) {
    case ModelKind::unrestricted:
        return E > 0 && N == 0;
    case ModelKind::distinct:
        return (__int128)E < e_min;
    case ModelKind::bounded_distinct: {
        if (!B) return true;
        if (N > *B) return true;
        const __int128 e_max = (__int128)N * *B - (__int128)N * (N - 1) / 2;
        return (__int128)E < e_min || (__int128)E > e_max;
    }
    }
    return true;
}

BigCount exact_count_of(ModelKind model, const ExactQuery& q) {
    switch (model) {
    case ModelKind::unrestricted: return count_unrestricted_max_parts(q.E, q.N);
    case ModelKind::distinct: return count_distinct(q.E, q.N);
    case ModelKind::bounded_distinct: return count_distinct_bounded(q.E, q.N, q.B.value());
    }
    throw std::logic_error("unreachable");
}

std::optional<double> limit_value(LimitKind kind, int64_t E, int64_t N,
                                  const std::optional<int64_t>& B) {
    switch (kind) {
    case LimitKind::none: return std::nullopt;
    case LimitKind::mb: return mb_limit_ln_q(E, N);
    case LimitKind::erdos: return erdos_ln_q(E, N);
    case LimitKind::total: return total_distinct_ln_q(E);
    case LimitKind::szekeres:
        if (!B) throw config_error("limit=szekeres requires a B rule");
        return szekeres_bounded_ln_q(E, N, *B);
    }
    return std::nullopt;
}

std::vector<int64_t> parse_int_list(const std::string& field, const std::string& text) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw config_error(field + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw config_error(field + ": empty list");
    return out;
}

double parse_double_field(const std::string& field, const std::string& text) {
    try {
        size_t pos = 0;
        double val = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return val;
    } catch (const std::exception&) {
        throw config_error(field + ": expected a number, got '" + text + "'");
    }
}

ModelKind parse_model(const std::string& text) {
    if (text == "unrestricted") return ModelKind::unrestricted;
    if (text == "distinct") return ModelKind::distinct;
    if (text == "bounded" || text == "bounded-distinct") return ModelKind::bounded_distinct;
    throw config_error("model: expected unrestricted|distinct|bounded, got '" + text + "'");
}

LimitKind parse_limit(const std::string& text) {
    if (text == "none") return LimitKind::none;
    if (text == "mb") return LimitKind::mb;
    if (text == "erdos") return LimitKind::erdos;
    if (text == "szekeres") return LimitKind::szekeres;
    if (text == "total") return LimitKind::total;
    throw config_error("limit: expected none|mb|erdos|szekeres|total, got '" + text + "'");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

int64_t default_exact_cap(ModelKind model) {
    if (const char* env = std::getenv("PARTASYM_EXACT_CAP")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw config_error("PARTASYM_EXACT_CAP: not an integer: '" + std::string(env) + "'");
        }
    }
    return model == ModelKind::bounded_distinct ? 2000 : 5000;
}

ComparisonRow compare_cell(ModelKind model, int64_t E, int64_t N,
                           std::optional<int64_t> B, LimitKind limit,
                           int64_t exact_cap) {
    ComparisonRow row;
    row.E = E;
    row.N = N;
    row.B = B;

    if (model == ModelKind::bounded_distinct && !B)
        throw std::invalid_argument("compare_cell: bounded model requires B");

    const bool empty_support = support_empty(model, E, N, B);
    if (empty_support) {
        row.exact_ln = kNegInf; // zero partitions, no DP needed
    } else if (E <= exact_cap) {
        const BigCount exact = exact_count_of(model, ExactQuery{E, N, B});
        row.exact_ln = exact.ln_value();
    }

    if (empty_support) {
        row.status = "infeasible";
    } else {
        try {
            const SaddleSolution sol = solve_saddle(model, E, N, B);
            const AsymptoticEstimate est = estimate(model, E, N, B);
            row.asym_ln = est.ln_value;
            row.v = sol.v;
            row.u = sol.u;
        } catch (const feasibility_error&) {
            row.status = "validity-error";
        } catch (const validity_error&) {
            row.status = "validity-error";
        } catch (const numerical_error&) {
            row.status = "validity-error";
        }
    }

    try {
        row.limit_ln = limit_value(limit, E, N, B);
    } catch (const std::invalid_argument&) {
        // limit formula undefined for this cell (e.g. N >= B); leave null
    }
    if (row.exact_ln && row.asym_ln && std::isfinite(*row.exact_ln) && *row.exact_ln != 0.0)
        row.rel_ln_err = std::fabs(*row.asym_ln - *row.exact_ln) / std::fabs(*row.exact_ln);
    return row;
}

std::vector<ComparisonRow> run_sweep(const SweepSpec& spec) {
    if (spec.e_values.empty()) throw config_error("E: no energies given");
    const int64_t cap = spec.exact_cap >= 0 ? spec.exact_cap : default_exact_cap(spec.model);
    const LimitConstants lc = limit_constants();

    std::vector<ComparisonRow> rows;
    for (int64_t E : spec.e_values) {
        if (E < 1) throw config_error("E: values must be >= 1");
        std::vector<int64_t> ns;
        switch (spec.n_rule) {
        case NRule::explicit_list:
            if (spec.n_values.empty()) throw config_error("N: no values for explicit rule");
            ns = spec.n_values;
            break;
        case NRule::fixed_u:
            ns.push_back(std::max<int64_t>(1, std::llround(spec.u_target * std::sqrt(double(E)))));
            break;
        case NRule::sigma_zero:
            ns.push_back(std::max<int64_t>(1, std::llround(std::sqrt(double(E)) * M_LN2 / lc.c)));
            break;
        }

        std::vector<std::optional<int64_t>> bs;
        switch (spec.b_rule) {
        case BRule::none:
            if (spec.model == ModelKind::bounded_distinct)
                throw config_error("B: the bounded-distinct model needs a B rule");
            bs.push_back(std::nullopt);
            break;
        case BRule::explicit_list:
            if (spec.b_values.empty()) throw config_error("B: no values for explicit rule");
            for (int64_t b : spec.b_values) bs.emplace_back(b);
            break;
        case BRule::fixed_ratio:
            bs.emplace_back(std::max<int64_t>(1, std::llround(spec.b_ratio * std::sqrt(double(E)))));
            break;
        }

        for (int64_t N : ns)
            for (const auto& B : bs)
                rows.push_back(compare_cell(spec.model, E, N, B, spec.limit, cap));
    }

    std::sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
        if (a.E != b.E) return a.E < b.E;
        if (a.N != b.N) return a.N < b.N;
        return a.B.value_or(-1) < b.B.value_or(-1);
    });
    return rows;
}

std::string rows_to_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = "E,N,B,exact_ln,asym_ln,limit_ln,rel_ln_err,v,u,status\n";
    auto opt = [](const std::optional<double>& x) {
        return x ? fmt_double(*x) : std::string();
    };
    for (const ComparisonRow& r : rows) {
        out += std::to_string(r.E) + ',' + std::to_string(r.N) + ',';
        if (r.B) out += std::to_string(*r.B);
        out += ',' + opt(r.exact_ln) + ',' + opt(r.asym_ln) + ',' + opt(r.limit_ln) +
               ',' + opt(r.rel_ln_err) + ',' + opt(r.v) + ',' + opt(r.u) + ',' +
               r.status + '\n';
    }
    return out;
}

namespace {

// -inf is encoded as the string "-inf" (JSON has no infinities); absent
// optionals are null.
nlohmann::json json_of_opt(const std::optional<double>& x) {
    if (!x) return nullptr;
    if (std::isinf(*x)) return "-inf";
    return *x;
}

std::optional<double> opt_of_json(const nlohmann::json& j, const char* field) {
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) {
        if (j.get<std::string>() == "-inf") return kNegInf;
        throw config_error(std::string(field) + ": unexpected string value");
    }
    return j.get<double>();
}

} // namespace

std::string rows_to_json(const std::vector<ComparisonRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ComparisonRow& r : rows) {
        nlohmann::json j;
        j["E"] = r.E;
        j["N"] = r.N;
        j["B"] = r.B ? nlohmann::json(*r.B) : nlohmann::json(nullptr);
        j["exact_ln"] = json_of_opt(r.exact_ln);
        j["asym_ln"] = json_of_opt(r.asym_ln);
        j["limit_ln"] = json_of_opt(r.limit_ln);
        j["rel_ln_err"] = json_of_opt(r.rel_ln_err);
        j["v"] = json_of_opt(r.v);
        j["u"] = json_of_opt(r.u);
        j["status"] = r.status;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<ComparisonRow> rows_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw config_error("JSON rows: expected an array");
    std::vector<ComparisonRow> rows;
    for (const nlohmann::json& j : arr) {
        ComparisonRow r;
        r.E = j.at("E").get<int64_t>();
        r.N = j.at("N").get<int64_t>();
        if (!j.at("B").is_null()) r.B = j.at("B").get<int64_t>();
        r.exact_ln = opt_of_json(j.at("exact_ln"), "exact_ln");
        r.asym_ln = opt_of_json(j.at("asym_ln"), "asym_ln");
        r.limit_ln = opt_of_json(j.at("limit_ln"), "limit_ln");
        r.rel_ln_err = opt_of_json(j.at("rel_ln_err"), "rel_ln_err");
        r.v = opt_of_json(j.at("v"), "v");
        r.u = opt_of_json(j.at("u"), "u");
        r.status = j.at("status").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

SweepSpec parse_sweep_config(std::istream& in) {
    SweepSpec spec;
    bool have_model = false, have_e = false;
    int n_rules = 0, b_rules = 0;

    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line is not key=value: '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "model") {
            spec.model = parse_model(val);
            have_model = true;
        } else if (key == "E") {
            spec.e_values = parse_int_list("E", val);
            have_e = true;
        } else if (key == "N") {
            spec.n_rule = NRule::explicit_list;
            spec.n_values = parse_int_list("N", val);
            ++n_rules;
        } else if (key == "u") {
            spec.n_rule = NRule::fixed_u;
            spec.u_target = parse_double_field("u", val);
            ++n_rules;
        } else if (key == "n_rule") {
            if (val != "sigma-zero")
                throw config_error("n_rule: only 'sigma-zero' is valid, got '" + val + "'");
            spec.n_rule = NRule::sigma_zero;
            ++n_rules;
        } else if (key == "B") {
            spec.b_rule = BRule::explicit_list;
            spec.b_values = parse_int_list("B", val);
            ++b_rules;
        } else if (key == "b_ratio") {
            spec.b_rule = BRule::fixed_ratio;
            spec.b_ratio = parse_double_field("b_ratio", val);
            ++b_rules;
        } else if (key == "format") {
            if (val == "csv") spec.format = OutputFormat::csv;
            else if (val == "json") spec.format = OutputFormat::json;
            else throw config_error("format: expected csv|json, got '" + val + "'");
        } else if (key == "limit") {
            spec.limit = parse_limit(val);
        } else if (key == "exact_cap") {
            const auto caps = parse_int_list("exact_cap", val);
            if (caps.size() != 1) throw config_error("exact_cap: expected one integer");
            spec.exact_cap = caps.front();
        } else {
            throw config_error("unknown config key '" + key + "'");
        }
    }

    if (!have_model) throw config_error("model: missing");
    if (!have_e) throw config_error("E: missing");
    if (n_rules != 1) throw config_error("exactly one of N, u, n_rule=sigma-zero is required");
    if (b_rules > 1) throw config_error("at most one of B, b_ratio is allowed");
    if (spec.model == ModelKind::bounded_distinct && b_rules == 0)
        throw config_error("B: the bounded-distinct model needs a B rule");
    if (spec.model != ModelKind::bounded_distinct && b_rules != 0)
        throw config_error("B: only valid for the bounded-distinct model");
    return spec;
}

} // namespace partasym
