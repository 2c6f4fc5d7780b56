#include "rnfree/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace rnfree {

BigUint::BigUint(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::from_u128(u128 v) {
    BigUint r;
    if (v != 0) {
        r.limbs_.push_back(static_cast<u64>(v));
        u64 hi = static_cast<u64>(v >> 64);
        if (hi != 0) r.limbs_.push_back(hi);
    }
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul_small(u64 m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 t = static_cast<u128>(limb) * m + carry;
        limb = static_cast<u64>(t);
        carry = static_cast<u64>(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::add_small(u64 a) {
    u64 carry = a;
    for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
        u128 t = static_cast<u128>(limbs_[i]) + carry;
        limbs_[i] = static_cast<u64>(t);
        carry = static_cast<u64>(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

u64 BigUint::div_small(u64 d) {
    if (d == 0) throw std::invalid_argument("BigUint: division by zero");
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / d);
        rem = static_cast<u64>(cur % d);
    }
    trim();
    return rem;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigUint();
    BigUint out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 t = static_cast<u128>(limbs_[i]) * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
        }
        out.limbs_[i + rhs.limbs_.size()] = carry;
    }
    out.trim();
    return out;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
    BigUint out;
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    out.limbs_.assign(n, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 t = static_cast<u128>(i < limbs_.size() ? limbs_[i] : 0) +
                 (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + carry;
        out.limbs_[i] = static_cast<u64>(t);
        carry = static_cast<u64>(t >> 64);
    }
    if (carry != 0) out.limbs_.push_back(carry);
    return out;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
    assert(*this >= rhs);
    BigUint out;
    out.limbs_.assign(limbs_.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 lhs = limbs_[i];
        u128 sub = static_cast<u128>(i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + borrow;
        if (lhs >= sub) {
            out.limbs_[i] = static_cast<u64>(lhs - sub);
            borrow = 0;
        } else {
            out.limbs_[i] = static_cast<u64>((lhs + (static_cast<u128>(1) << 64)) - sub);
            borrow = 1;
        }
    }
    out.trim();
    return out;
}

int BigUint::cmp(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint BigUint::pow(u64 base, unsigned exp) {
    BigUint out(1);
    for (unsigned i = 0; i < exp; ++i) out.mul_small(base);
    return out;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string digits;
    while (!tmp.is_zero()) {
        u64 rem = tmp.div_small(1000000000000000000ULL);
        std::string chunk = std::to_string(rem);
        if (tmp.is_zero()) {
            digits = chunk + digits;
        } else {
            digits = std::string(18 - chunk.size(), '0') + chunk + digits;
        }
    }
    return digits;
}

long double BigUint::to_long_double() const {
    long double out = 0.0L;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        out = out * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
    }
    return out;
}

} // namespace rnfree
