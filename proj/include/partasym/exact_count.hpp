#ifndef PARTASYM_EXACT_COUNT_HPP
#define PARTASYM_EXACT_COUNT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "partasym/big_count.hpp"

namespace partasym {

// One exact-count query.  B absent means parts are unbounded.
struct ExactQuery {
    std::int64_t E = 0;
    std::int64_t N = 0;
    std::optional<std::int64_t> B;
};

// P(E,N): partitions of E into at most N positive parts.
// Recurrence P(E,N) = P(E,N-1) + P(E-N,N), P(0,N) = 1, P(E,0) = 0 for E > 0.
BigCount count_unrestricted_max_parts(std::int64_t E, std::int64_t N);

// q(E,N): partitions of E into exactly N pairwise-distinct positive parts.
// Recurrence q(E,N) = q(E-N,N) + q(E-N,N-1) (subtract 1 from every part);
// zero whenever E < N(N+1)/2.
BigCount count_distinct(std::int64_t E, std::int64_t N);

// q(E,N,B): partitions of E into exactly N distinct parts, each in 1..B.
// 0/1 selection DP rolled over part sizes k = 1..B with state (energy,
// parts used).  Zero outside N(N+1)/2 <= E <= NB - N(N-1)/2 or when N > B.
BigCount count_distinct_bounded(std::int64_t E, std::int64_t N, std::int64_t B);

// q(E) = sum_N q(E,N), computed by an independent single-variable DP over
// distinct parts (not by summing count_distinct), so the sum identity stays
// a genuine cross-check.
BigCount count_distinct_total(std::int64_t E);

// true iff q(E,N) == P(E - N(N+1)/2, N), a negative shifted argument counting
// as zero.
bool verify_shift_identity(std::int64_t E, std::int64_t N);

// Full tables for multi-query use.  Construction is single-writer; a
// completed table is immutable and safe to share across threads.

class UnrestrictedTable {
public:
    UnrestrictedTable(std::int64_t e_max, std::int64_t n_max);
    const mpz_class& at(std::int64_t e, std::int64_t n) const;
    std::int64_t e_max() const { return e_max_; }
    std::int64_t n_max() const { return n_max_; }

private:
    std::int64_t e_max_;
    std::int64_t n_max_;
    std::vector<mpz_class> cells_; // row-major, (e, n) -> e*(n_max_+1) + n
};

class DistinctTable {
public:
    DistinctTable(std::int64_t e_max, std::int64_t n_max);
    const mpz_class& at(std::int64_t e, std::int64_t n) const;
    std::int64_t e_max() const { return e_max_; }
    std::int64_t n_max() const { return n_max_; }

private:
    std::int64_t e_max_;
    std::int64_t n_max_;
    std::vector<mpz_class> cells_;
};

} // namespace partasym

#endif
