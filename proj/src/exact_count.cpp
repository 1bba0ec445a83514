#include "partasym/exact_count.hpp"

#include <algorithm>
#include <stdexcept>

namespace partasym {

namespace {

using std::int64_t;

void check_nonnegative(const char* who, int64_t E, int64_t N) {
    if (E < 0 || N < 0)
        throw std::invalid_argument(std::string(who) + ": E and N must be >= 0");
}

// N(N+1)/2 without int64 overflow for any N that could matter here.
__int128 min_distinct_energy(int64_t N) {
    return (__int128)N * (N + 1) / 2;
}

} // namespace

UnrestrictedTable::UnrestrictedTable(int64_t e_max, int64_t n_max)
    : e_max_(e_max), n_max_(n_max), cells_((e_max + 1) * (n_max + 1)) {
    check_nonnegative("UnrestrictedTable", e_max, n_max);
    const int64_t stride = n_max_ + 1;
    for (int64_t n = 0; n <= n_max_; ++n) cells_[n] = 1; // P(0,n) = 1
    for (int64_t e = 1; e <= e_max_; ++e) {
        for (int64_t n = 1; n <= n_max_; ++n) {
            mpz_class& cell = cells_[e * stride + n];
            cell = cells_[e * stride + n - 1];
            if (e >= n) cell += cells_[(e - n) * stride + n];
        }
    }
}

const mpz_class& UnrestrictedTable::at(int64_t e, int64_t n) const {
    if (e < 0 || e > e_max_ || n < 0 || n > n_max_)
        throw std::out_of_range("UnrestrictedTable::at");
    return cells_[e * (n_max_ + 1) + n];
}

DistinctTable::DistinctTable(int64_t e_max, int64_t n_max)
    : e_max_(e_max), n_max_(n_max), cells_((e_max + 1) * (n_max + 1)) {
    check_nonnegative("DistinctTable", e_max, n_max);
    const int64_t stride = n_max_ + 1;
    cells_[0] = 1; // q(0,0) = 1
    for (int64_t e = 1; e <= e_max_; ++e) {
        for (int64_t n = 1; n <= n_max_; ++n) {
            if (e < n) continue;
            mpz_class& cell = cells_[e * stride + n];
            cell = cells_[(e - n) * stride + n];
            cell += cells_[(e - n) * stride + n - 1];
        }
    }
}

const mpz_class& DistinctTable::at(int64_t e, int64_t n) const {
    if (e < 0 || e > e_max_ || n < 0 || n > n_max_)
        throw std::out_of_range("DistinctTable::at");
    return cells_[e * (n_max_ + 1) + n];
}

BigCount count_unrestricted_max_parts(int64_t E, int64_t N) {
    check_nonnegative("count_unrestricted_max_parts", E, N);
    if (E == 0) return BigCount(mpz_class(1));
    if (N == 0) return BigCount();
    // parts of size > E never contribute
    UnrestrictedTable table(E, std::min(N, E));
    return BigCount(table.at(E, std::min(N, E)));
}

BigCount count_distinct(int64_t E, int64_t N) {
    check_nonnegative("count_distinct", E, N);
    if (N == 0) return E == 0 ? BigCount(mpz_class(1)) : BigCount();
    if ((__int128)E < min_distinct_energy(N)) return BigCount();
    DistinctTable table(E, N);
    return BigCount(table.at(E, N));
}

BigCount count_distinct_bounded(int64_t E, int64_t N, int64_t B) {
    check_nonnegative("count_distinct_bounded", E, N);
    if (B < 1)
        throw std::invalid_argument("count_distinct_bounded: B must be >= 1");
    if (N == 0) return E == 0 ? BigCount(mpz_class(1)) : BigCount();
    if (N > B) return BigCount();
    if ((__int128)E < min_distinct_energy(N)) return BigCount();
    const __int128 max_energy = (__int128)N * B - (__int128)N * (N - 1) / 2;
    if ((__int128)E > max_energy) return BigCount();

    // dp(e, n) = number of ways to pick n distinct parts from 1..k summing
    // to e; roll k = 1..B, descending (e, n) for the 0/1 selection.
    const int64_t stride = N + 1;
    std::vector<mpz_class> dp((E + 1) * stride);
    dp[0] = 1;
    const int64_t k_max = std::min(B, E);
    for (int64_t k = 1; k <= k_max; ++k) {
        for (int64_t e = E; e >= k; --e) {
            const int64_t n_hi = std::min<int64_t>(N, k);
            for (int64_t n = n_hi; n >= 1; --n) {
                dp[e * stride + n] += dp[(e - k) * stride + n - 1];
            }
        }
    }
    return BigCount(dp[E * stride + N]);
}

BigCount count_distinct_total(int64_t E) {
    if (E < 0)
        throw std::invalid_argument("count_distinct_total: E must be >= 0");
    std::vector<mpz_class> dp(E + 1);
    dp[0] = 1;
    for (int64_t k = 1; k <= E; ++k)
        for (int64_t e = E; e >= k; --e)
            dp[e] += dp[e - k];
    return BigCount(dp[E]);
}

bool verify_shift_identity(int64_t E, int64_t N) {
    check_nonnegative("verify_shift_identity", E, N);
    const BigCount lhs = count_distinct(E, N);
    const __int128 shifted = (__int128)E - min_distinct_energy(N);
    const BigCount rhs =
        shifted < 0 ? BigCount() : count_unrestricted_max_parts((int64_t)shifted, N);
    return lhs == rhs;
}

} // namespace partasym
