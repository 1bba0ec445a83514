#ifndef PARTASYM_SWEEP_HPP
#define PARTASYM_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partasym/saddle.hpp"

namespace partasym {

enum class NRule { explicit_list, fixed_u, sigma_zero };
enum class BRule { none, explicit_list, fixed_ratio };
enum class OutputFormat { csv, json };

// Which closed-form limit to evaluate into the limit_ln column.
enum class LimitKind { none, mb, erdos, szekeres, total };

struct SweepSpec {
    ModelKind model = ModelKind::distinct;
    std::vector<std::int64_t> e_values;

    NRule n_rule = NRule::explicit_list;
    std::vector<std::int64_t> n_values; // explicit_list
    double u_target = 0.0;              // fixed_u: N = round(u sqrt(E))

    BRule b_rule = BRule::none;
    std::vector<std::int64_t> b_values; // explicit_list
    double b_ratio = 0.0;               // fixed_ratio: B = round(r sqrt(E))

    OutputFormat format = OutputFormat::csv;
    LimitKind limit = LimitKind::none;

    // Exact counting is skipped (exact_ln = null) above this E.
    // Defaults: 5000, bounded model 2000; env PARTASYM_EXACT_CAP overrides.
    std::int64_t exact_cap = -1;
};

// One (E, N[, B]) cell of an exact-vs-asymptotic sweep.
// status: "ok" | "infeasible" (zero partitions; exact_ln = -inf) |
//         "validity-error" (support is nonempty but the saddle evaluation
//         failed; asym fields empty).
struct ComparisonRow {
    std::int64_t E = 0;
    std::int64_t N = 0;
    std::optional<std::int64_t> B;
    std::optional<double> exact_ln; // null when skipped by the exact cap
    std::optional<double> asym_ln;
    std::optional<double> limit_ln;
    std::optional<double> rel_ln_err; // |asym-exact|/|exact| when both present
    std::optional<double> v;
    std::optional<double> u;
    std::string status = "ok";

    friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

// Evaluates every cell of the sweep; rows come back sorted by (E, N, B).
std::vector<ComparisonRow> run_sweep(const SweepSpec& spec);

// Evaluates a single cell (the `compare` subcommand).
ComparisonRow compare_cell(ModelKind model, std::int64_t E, std::int64_t N,
                           std::optional<std::int64_t> B, LimitKind limit,
                           std::int64_t exact_cap);

// CSV with the fixed header E,N,B,exact_ln,asym_ln,limit_ln,rel_ln_err,v,u,status.
// Floats are printed with 17 significant digits; -inf prints as "-inf";
// absent optionals print as empty fields.  Byte-stable across runs.
std::string rows_to_csv(const std::vector<ComparisonRow>& rows);

// JSON array of row objects; absent optionals are null, -inf is the string
// "-inf".  rows_from_json inverts rows_to_json exactly.
std::string rows_to_json(const std::vector<ComparisonRow>& rows);
std::vector<ComparisonRow> rows_from_json(const std::string& text);

// Flat key=value config (see README); throws config_error naming the bad field.
SweepSpec parse_sweep_config(std::istream& in);

std::int64_t default_exact_cap(ModelKind model); // honors PARTASYM_EXACT_CAP

int cli_main(int argc, const char* const* argv);

} // namespace partasym

#endif
