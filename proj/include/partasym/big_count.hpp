#ifndef PARTASYM_BIG_COUNT_HPP
#define PARTASYM_BIG_COUNT_HPP

#include <gmpxx.h>

#include <string>

namespace partasym {

// Arbitrary-precision nonnegative partition count.  ln_value() is computed
// from the exact integer (mantissa plus bit length), never by floating
// accumulation; a zero count maps to -inf.
class BigCount {
public:
    BigCount() : value_(0) {}
    explicit BigCount(mpz_class value);
    explicit BigCount(unsigned long value) : value_(value) {}

    const mpz_class& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    // Natural log of the exact integer, correct to a few ulps; -inf for 0.
    double ln_value() const;

    std::string str() const { return value_.get_str(); }

    friend bool operator==(const BigCount& a, const BigCount& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const BigCount& a, const BigCount& b) { return !(a == b); }

private:
    mpz_class value_;
};

} // namespace partasym

#endif
