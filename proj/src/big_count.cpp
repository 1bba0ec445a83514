#include "partasym/big_count.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace partasym {

BigCount::BigCount(mpz_class value) : value_(std::move(value)) {
    if (value_ < 0)
        throw std::invalid_argument("BigCount: value must be nonnegative");
}

double BigCount::ln_value() const {
    if (value_ == 0) return -std::numeric_limits<double>::infinity();
    // value = mant * 2^exp with mant in [0.5, 1); mant carries the top bits.
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, value_.get_mpz_t());
    return std::log(mant) + double(exp2) * M_LN2;
}

} // namespace partasym
