#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "partasym/debye.hpp"
#include "support/quadrature.hpp"

using namespace partasym;

namespace {
constexpr double kPiSqOver6 = 1.644934066848226436472;
constexpr double kPiSqOver12 = 0.8224670334241132182362;

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) out.push_back(lo * std::exp(i * step));
    return out;
}
} // namespace

TEST_CASE("endpoints and limits") {
    CHECK(g_minus(0.0).value == 0.0);
    CHECK(g_plus(0.0).value == 0.0);
    CHECK(g_minus(60.0).value == doctest::Approx(kPiSqOver6).epsilon(1e-15));
    CHECK(g_minus(800.0).value == kPiSqOver6); // saturated beyond the domain cap
}

TEST_CASE("quadrature oracle agreement") {
    // frozen oracle value at v = 1 plus a live sweep
    CHECK(g_minus(1.0).value == doctest::Approx(0.77750463411224827642).epsilon(1e-14));
    for (double v : {0.05, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 7.0, 15.0, 40.0}) {
        const double oracle = test::g_minus_quadrature(v);
        CHECK(std::fabs(g_minus(v).value - oracle) <= 1e-12);
    }
}

TEST_CASE("special value g_plus(ln 2) = pi^2/12") {
    CHECK(std::fabs(g_plus(M_LN2).value - kPiSqOver12) <= 1e-12);
}

TEST_CASE("defining identity g_plus = g_minus + v^2/2") {
    CHECK(g_plus(3.0).value == doctest::Approx(g_minus(3.0).value + 4.5).epsilon(1e-15));
    for (double v : log_spaced(1e-6, 50.0, 100))
        CHECK(std::fabs(g_plus(v).value - g_minus(v).value - 0.5 * v * v) <= 1e-12);
}

TEST_CASE("monotonicity and bounds of g_minus") {
    // strictly increasing until the tail drops below double resolution
    double prev = 0.0;
    for (double v : log_spaced(1e-8, 30.0, 150)) {
        const double g = g_minus(v).value;
        CHECK(g > prev);
        CHECK(g <= std::min(v, kPiSqOver6) * (1.0 + 1e-15));
        prev = g;
    }
    for (double v : log_spaced(30.0, 600.0, 30)) {
        const double g = g_minus(v).value;
        CHECK(g >= prev);
        CHECK(g <= kPiSqOver6);
        prev = g;
    }
}

TEST_CASE("g_plus(v)/v^2 strictly decreasing with limits +inf and 1/2") {
    double prev = std::numeric_limits<double>::infinity();
    for (double v : log_spaced(1e-6, 500.0, 120)) {
        const double ratio = g_plus(v).value / (v * v);
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(g_plus(1e-8).value / 1e-16 > 1e6);
    CHECK(g_plus(650.0).value / (650.0 * 650.0) == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("branch agreement at the switch point") {
    const double lo = detail::g_minus_taylor(1.0);
    const double hi = detail::g_minus_tail(1.0);
    CHECK(std::fabs(lo - hi) <= 1e-12);
}

TEST_CASE("error bounds stay below 1e-12 on the domain") {
    for (double v : log_spaced(1e-6, 700.0, 60)) {
        CHECK(g_minus(v).abs_error_bound <= 1e-12);
        CHECK(g_plus(v).abs_error_bound <= 1e-12);
    }
}

TEST_CASE("integrand derivatives") {
    CHECK(g_minus_prime(0.0) == 1.0);
    CHECK(g_plus_prime(0.0) == 1.0);
    for (double v : {0.3, 1.0, 4.0}) {
        const double h = 1e-6;
        const double fd = (g_minus(v + h).value - g_minus(v - h).value) / (2 * h);
        CHECK(g_minus_prime(v) == doctest::Approx(fd).epsilon(1e-8));
        CHECK(g_plus_prime(v) == doctest::Approx(g_minus_prime(v) + v).epsilon(1e-14));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(g_minus(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(g_plus(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(g_minus(std::numeric_limits<double>::infinity()), std::invalid_argument);
}
