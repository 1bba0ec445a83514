#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "partasym/big_count.hpp"

using partasym::BigCount;

TEST_CASE("zero count maps to -inf") {
    BigCount zero;
    CHECK(zero.is_zero());
    CHECK(zero.ln_value() == -std::numeric_limits<double>::infinity());
    CHECK(zero.str() == "0");
}

TEST_CASE("ln_value is exact-rounded") {
    CHECK(BigCount(mpz_class(1)).ln_value() == 0.0);
    CHECK(BigCount(mpz_class(2)).ln_value() == doctest::Approx(M_LN2).epsilon(1e-15));

    // 100! has a well-known log
    mpz_class fact = 1;
    for (int k = 2; k <= 100; ++k) fact *= k;
    const double expect = std::lgamma(101.0);
    CHECK(BigCount(fact).ln_value() == doctest::Approx(expect).epsilon(1e-14));

    // far beyond double range: 2^5000
    mpz_class big = mpz_class(1) << 5000;
    CHECK(BigCount(big).ln_value() == doctest::Approx(5000.0 * M_LN2).epsilon(1e-15));
}

TEST_CASE("negative values are rejected") {
    CHECK_THROWS_AS(BigCount(mpz_class(-3)), std::invalid_argument);
}

TEST_CASE("equality compares exact integers") {
    CHECK(BigCount(mpz_class(41)) == BigCount(mpz_class(41)));
    CHECK(BigCount(mpz_class(41)) != BigCount(mpz_class(40)));
}
