#pragma once

#include <string>
#include <vector>

#include "rnfree/ints.hpp"

namespace rnfree {

// Unsigned integer of arbitrary width. Covers the exact inequality checks
// where the squared quantities overflow 128 bits (primorials of ~20 primes,
// the 8.94e22-scale threshold). Not a general bignum: only the operations
// the bound checks need.
class BigUint {
  public:
    BigUint() = default;
    BigUint(u64 v);
    static BigUint from_u128(u128 v);

    bool is_zero() const { return limbs_.empty(); }

    BigUint& mul_small(u64 m);
    BigUint& add_small(u64 a);
    // in-place divide by d (d > 0), returns the remainder
    u64 div_small(u64 d);

    BigUint operator*(const BigUint& rhs) const;
    BigUint operator+(const BigUint& rhs) const;
    // requires *this >= rhs
    BigUint operator-(const BigUint& rhs) const;

    // -1, 0, +1
    int cmp(const BigUint& rhs) const;
    bool operator<(const BigUint& rhs) const { return cmp(rhs) < 0; }
    bool operator>(const BigUint& rhs) const { return cmp(rhs) > 0; }
    bool operator==(const BigUint& rhs) const { return cmp(rhs) == 0; }
    bool operator<=(const BigUint& rhs) const { return cmp(rhs) <= 0; }
    bool operator>=(const BigUint& rhs) const { return cmp(rhs) >= 0; }

    BigUint squared() const { return *this * *this; }
    static BigUint pow(u64 base, unsigned exp);

    std::string to_string() const;
    long double to_long_double() const;

  private:
    void trim();
    std::vector<u64> limbs_; // base 2^64, little endian, no trailing zeros
};

} // namespace rnfree
