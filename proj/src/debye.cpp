#include "partasym/debye.hpp"

#include <cmath>
#include <stdexcept>

namespace partasym {

namespace {

constexpr double kPiSqOver6 = 1.644934066848226436472;

// Upper domain cap: beyond this the tail is below double underflow anyway.
constexpr double kDomainCap = 700.0;

// B_{2k} / ((2k+1) * (2k)!) for k = 1..14, the termwise-integrated Taylor
// coefficients of t/(e^t - 1).  Terms fall below 1e-18 well before k = 14
// on [0, 1).
constexpr double kTaylorCoef[] = {
    0.02777777777777777777778,      // k=1
    -0.0002777777777777777777778,   // k=2
    4.724111866969009826153e-6,     // k=3
    -9.185773074661963550852e-8,    // k=4
    1.897886998897099907201e-9,     // k=5
    -4.064761645144225526806e-11,   // k=6
    8.921691020456452555218e-13,    // k=7
    -1.993929586072107568724e-14,   // k=8
    4.518980029619918191650e-16,    // k=9
    -1.035651761218124701448e-17,   // k=10
    2.395218621026186745740e-19,    // k=11
    -5.581785874325009336283e-21,   // k=12
    1.309150755418321285812e-22,    // k=13
    -3.087419802426740293242e-24,   // k=14
};

void check_domain(const char* who, double v) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(std::string(who) + ": v must be finite and >= 0");
}

} // namespace

double detail::g_minus_taylor(double v) {
    const double v2 = v * v;
    double sum = v - 0.25 * v2;
    double pow = v2 * v;
    for (double coef : kTaylorCoef) {
        const double term = coef * pow;
        sum += term;
        if (std::fabs(term) < 1e-18) break;
        pow *= v2;
    }
    return sum;
}

double detail::g_minus_tail(double v) {
    // int_v^inf t/(e^t - 1) dt = sum_{k>=1} e^{-k v} (v/k + 1/k^2)
    double tail = 0.0;
    for (int k = 1;; ++k) {
        const double term = std::exp(-k * v) * (v / k + 1.0 / (double(k) * k));
        tail += term;
        if (term < 1e-18) break;
    }
    return kPiSqOver6 - tail;
}

IntegralValue g_minus(double v) {
    check_domain("g_minus", v);
    if (v == 0.0) return {0.0, 0.0};
    if (v > kDomainCap) return {kPiSqOver6, 3e-16};
    const double value = (v < 1.0) ? detail::g_minus_taylor(v) : detail::g_minus_tail(v);
    // truncation cutoff plus a few ulps of accumulation
    return {value, 1e-18 + 4e-16 * (1.0 + value)};
}

IntegralValue g_plus(double v) {
    check_domain("g_plus", v);
    IntegralValue gm = g_minus(v);
    // The v^2/2 shift is exact; the bound tracks the series evaluation (the
    // shifted result carries at most one extra ulp).
    return {gm.value + 0.5 * v * v, gm.abs_error_bound};
}

double g_minus_prime(double v) {
    check_domain("g_minus_prime", v);
    if (v == 0.0) return 1.0;
    return v / std::expm1(v);
}

double g_plus_prime(double v) {
    check_domain("g_plus_prime", v);
    if (v == 0.0) return 1.0;
    return v / (-std::expm1(-v));
}

} // namespace partasym
