#ifndef PARTASYM_DEBYE_HPP
#define PARTASYM_DEBYE_HPP

namespace partasym {

// Value of a Debye-type integral together with a conservative absolute error
// bound of the evaluation.
struct IntegralValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

// g_minus(v) = int_0^v t/(e^t - 1) dt.
// Strictly increasing in v, bounded above by pi^2/6 (the v -> inf limit).
// Saturates exactly at pi^2/6 for v > 700.
IntegralValue g_minus(double v);

// g_plus(v) = int_0^v t/(1 - e^{-t}) dt = g_minus(v) + v^2/2.
// The identity is exact: the integrands differ by t.
IntegralValue g_plus(double v);

// Integrand values (derivatives of the integrals); both tend to 1 as v -> 0.
double g_minus_prime(double v); // v/(e^v - 1)
double g_plus_prime(double v);  // v/(1 - e^{-v})

namespace detail {
// The two evaluation branches, exposed so tests can compare them at the
// switch point v = 1.
double g_minus_taylor(double v); // v < 1: termwise-integrated Taylor series
double g_minus_tail(double v);   // v >= 1: pi^2/6 minus the exponential tail
} // namespace detail

} // namespace partasym

#endif
