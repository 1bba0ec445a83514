#include "partasym/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace partasym {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_positive(const char* who, std::int64_t E, std::int64_t N) {
    if (E < 1 || N < 1)
        throw std::invalid_argument(std::string(who) + ": requires E >= 1 and N >= 1");
}

} // namespace

double LimitConstants::sigma(std::int64_t E, std::int64_t N) const {
    return double(N) - std::sqrt(double(E)) * M_LN2 / c;
}

LimitConstants limit_constants() {
    const double c = kPi / (2.0 * std::sqrt(3.0)); // c^2 = pi^2/12
    return {c, 1.0 - M_LN2 * M_LN2 / (c * c)};
}

double mb_limit_ln_q(std::int64_t E, std::int64_t N) {
    check_positive("mb_limit_ln_q", E, N);
    return 2.0 * double(N) + double(N - 1) * std::log(double(E)) -
           std::log(2.0 * kPi) - 2.0 * double(N) * std::log(double(N));
}

double erdos_ln_q(std::int64_t E, std::int64_t N) {
    check_positive("erdos_ln_q", E, N);
    const LimitConstants lc = limit_constants();
    const double sqrt_e = std::sqrt(double(E));
    const double sigma = lc.sigma(E, N);
    return 2.0 * lc.c * sqrt_e - 2.0 * lc.c * sigma * sigma / (lc.gamma * sqrt_e) -
           std::log(4.0 * std::sqrt(6.0 * lc.gamma)) - std::log(double(E));
}

double total_distinct_ln_q(std::int64_t E) {
    if (E < 1)
        throw std::invalid_argument("total_distinct_ln_q: requires E >= 1");
    const LimitConstants lc = limit_constants();
    return 2.0 * lc.c * std::sqrt(double(E)) - std::log(4.0) -
           0.25 * std::log(3.0) - 0.75 * std::log(double(E));
}

double szekeres_bounded_ln_q(std::int64_t E, std::int64_t N, std::int64_t B) {
    check_positive("szekeres_bounded_ln_q", E, N);
    if (N >= B)
        throw std::invalid_argument("szekeres_bounded_ln_q: requires N < B");
    const LimitConstants lc = limit_constants();
    const double sqrt_e = std::sqrt(double(E));
    return erdos_ln_q(E, N) - (sqrt_e / lc.c) * std::exp(-lc.c * double(B) / sqrt_e);
}

} // namespace partasym
