#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "partasym/exact_count.hpp"
#include "support/enumerate.hpp"

using namespace partasym;

namespace {
long long as_ll(const BigCount& c) { return c.value().get_si(); }
} // namespace

TEST_CASE("unrestricted P(E,N) basics") {
    CHECK(as_ll(count_unrestricted_max_parts(0, 7)) == 1); // empty partition
    CHECK(as_ll(count_unrestricted_max_parts(5, 2)) == 3); // {5},{4,1},{3,2}
    CHECK(as_ll(count_unrestricted_max_parts(4, 3)) == 4); // {4},{3,1},{2,2},{2,1,1}
    CHECK(as_ll(count_unrestricted_max_parts(7, 0)) == 0);
    CHECK(count_unrestricted_max_parts(100, 10).str() == "6292069");
}

TEST_CASE("distinct q(E,N) basics") {
    CHECK(as_ll(count_distinct(6, 3)) == 1);  // {3,2,1}
    CHECK(as_ll(count_distinct(10, 3)) == 4); // {7,2,1},{6,3,1},{5,4,1},{5,3,2}
    CHECK(as_ll(count_distinct(5, 4)) == 0);  // below minimum N(N+1)/2 = 10
    CHECK(as_ll(count_distinct(0, 0)) == 1);
    CHECK(count_distinct(100, 5).str() == "25337");
    CHECK(count_distinct(50, 4).str() == "632");
}

TEST_CASE("bounded q(E,N,B) basics") {
    CHECK(as_ll(count_distinct_bounded(10, 3, 5)) == 2);  // {5,4,1},{5,3,2}
    CHECK(as_ll(count_distinct_bounded(10, 3, 10)) == 4); // B >= E: distinct count
    CHECK(as_ll(count_distinct_bounded(6, 3, 3)) == 1);   // {3,2,1}
    CHECK(as_ll(count_distinct_bounded(30, 4, 10)) == 5);
    CHECK(as_ll(count_distinct_bounded(20, 3, 9)) == 4);
}

TEST_CASE("totals q(E) basics") {
    CHECK(as_ll(count_distinct_total(10)) == 10);
    CHECK(as_ll(count_distinct_total(0)) == 1);
    CHECK(as_ll(count_distinct_total(3)) == 2); // {3},{2,1}
    CHECK(count_distinct_total(100).str() == "444793");
}

TEST_CASE("shift identity examples") {
    CHECK(verify_shift_identity(10, 3)); // both sides 4
    CHECK(verify_shift_identity(6, 3));  // both sides 1 (P(0,3) = 1)
    CHECK(verify_shift_identity(5, 4));  // both sides 0, shifted argument negative
    for (std::int64_t e = 0; e <= 60; ++e)
        for (std::int64_t n = 0; n <= 10; ++n)
            CHECK(verify_shift_identity(e, n));
}

TEST_CASE("totals identity over N") {
    for (std::int64_t e = 0; e <= 60; ++e) {
        mpz_class sum = 0;
        for (std::int64_t n = 0; n * (n + 1) / 2 <= e; ++n)
            sum += count_distinct(e, n).value();
        CHECK(sum == count_distinct_total(e).value());
    }
}

TEST_CASE("bounded is nondecreasing in B and stabilizes at B >= E") {
    const std::int64_t E = 24, N = 3;
    mpz_class prev = 0;
    for (std::int64_t b = 1; b <= E + 5; ++b) {
        const mpz_class cur = count_distinct_bounded(E, N, b).value();
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(prev == count_distinct(E, N).value());
    CHECK(count_distinct_bounded(E, N, E + 100) == count_distinct(E, N));
}

TEST_CASE("bounded vanishes outside its support") {
    // support: N(N+1)/2 <= E <= NB - N(N-1)/2 and N <= B
    CHECK(count_distinct_bounded(9, 4, 20).is_zero());  // below 10
    CHECK(count_distinct_bounded(15, 4, 5).is_zero());  // above 4*5-6 = 14
    CHECK(!count_distinct_bounded(14, 4, 5).is_zero()); // {5,4,3,2}
    CHECK(count_distinct_bounded(10, 4, 3).is_zero());  // N > B
}

TEST_CASE("counters agree with the naive enumerator (small grid)") {
    for (std::int64_t e = 0; e <= 18; ++e) {
        for (std::int64_t n = 0; n <= 5; ++n) {
            CHECK(as_ll(count_unrestricted_max_parts(e, n)) ==
                  test::enum_unrestricted_max_parts(e, n));
            CHECK(as_ll(count_distinct(e, n)) == test::enum_distinct(e, n, e));
            for (std::int64_t b = 1; b <= 12; b += 3)
                CHECK(as_ll(count_distinct_bounded(e, n, b)) ==
                      test::enum_distinct(e, n, b));
        }
        CHECK(as_ll(count_distinct_total(e)) == test::enum_distinct_total(e));
    }
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(count_unrestricted_max_parts(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_distinct(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(count_distinct_bounded(3, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_distinct_total(-2), std::invalid_argument);
}

TEST_CASE("tables match the one-shot counters") {
    UnrestrictedTable pt(40, 8);
    DistinctTable qt(40, 8);
    for (std::int64_t e = 0; e <= 40; e += 7)
        for (std::int64_t n = 0; n <= 8; ++n) {
            CHECK(pt.at(e, n) == count_unrestricted_max_parts(e, n).value());
            CHECK(qt.at(e, n) == count_distinct(e, n).value());
        }
    CHECK_THROWS_AS(pt.at(41, 0), std::out_of_range);
    CHECK_THROWS_AS(qt.at(0, 9), std::out_of_range);
}
