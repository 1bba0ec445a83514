#ifndef PARTASYM_LIMITS_HPP
#define PARTASYM_LIMITS_HPP

#include <cstdint>

namespace partasym {

// Constants of the near-typical regime: c^2 = pi^2/12, gamma = 1 - (ln 2)^2/c^2,
// sigma(E,N) = N - sqrt(E) ln(2)/c (deviation of N from its typical value).
struct LimitConstants {
    double c;
    double gamma;
    double sigma(std::int64_t E, std::int64_t N) const;
};

LimitConstants limit_constants();

// ln q(E,N) in the regime N << sqrt(E):  q ~ e^{2N} E^{N-1} / (2 pi N^{2N}).
double mb_limit_ln_q(std::int64_t E, std::int64_t N);

// ln q(E,N) near the typical N (sigma = O(E^{1/4})):
//   q ~ exp(2c sqrt(E) - 2c sigma^2/(gamma sqrt(E))) / (4 sqrt(6 gamma) E).
// The 1/E factor is part of the general-formula prefactor f(u)/E; dropping it
// breaks the match with the direct saddle evaluation by ln E.
double erdos_ln_q(std::int64_t E, std::int64_t N);

// ln of the total count over all N:  q(E) ~ exp(2c sqrt(E)) / (4 * 3^{1/4} E^{3/4}).
double total_distinct_ln_q(std::int64_t E);

// Bounded-part correction around the typical N:
//   ln q(E,N,B) ~ erdos_ln_q(E,N) - (sqrt(E)/c) e^{-c B / sqrt(E)}.
// The exponent decays in B: the correction must vanish as B -> infinity
// (a growing exponent would diverge instead).
double szekeres_bounded_ln_q(std::int64_t E, std::int64_t N, std::int64_t B);

} // namespace partasym

#endif
