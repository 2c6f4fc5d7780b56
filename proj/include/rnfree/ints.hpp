#pragma once

#include <cstdint>

namespace rnfree {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

constexpr u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

// a^e mod m, valid for m < 2^32 (the intermediate product fits in 64 bits)
constexpr u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

} // namespace rnfree
