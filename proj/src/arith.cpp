#include "rnfree/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rnfree::arith {

namespace testhooks {
u64 mobius_override_m = 0;
int mobius_override_value = 0;
} // namespace testhooks

u64 Factorization::radical() const {
    u64 r = 1;
    for (const auto& f : factors) r *= f.prime;
    return r;
}

bool Factorization::squarefree() const {
    for (const auto& f : factors)
        if (f.exponent > 1) return false;
    return true;
}

std::vector<u64> Factorization::divisors() const {
    std::vector<u64> out{1};
    for (const auto& f : factors) {
        const std::size_t n = out.size();
        u64 pe = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pe *= f.prime;
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> Factorization::prime_list() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
}

void Factorization::check() const {
    u64 prod = 1;
    u64 prev = 0;
    for (const auto& f : factors) {
        if (f.prime <= prev || f.exponent == 0)
            throw std::logic_error("Factorization: primes not increasing or zero exponent");
        prev = f.prime;
        for (unsigned e = 0; e < f.exponent; ++e) {
            if (prod > value / f.prime) throw std::logic_error("Factorization: product overflow");
            prod *= f.prime;
        }
    }
    if (prod != value) throw std::logic_error("Factorization: product mismatch");
}

std::vector<u32> primes_upto(u64 n) {
    std::vector<u32> out;
    if (n < 2) return out;
    std::vector<u8> composite(n + 1, 0);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<u32>(i));
        for (u64 j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

LpfTable::LpfTable(u64 lo, u64 hi, u64 segment_len) : lo_(lo), hi_(hi) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("LpfTable: bad range");
    if (hi >= (u64(1) << 32)) throw std::invalid_argument("LpfTable: range above 32-bit limit");
    if (segment_len < 2) throw std::invalid_argument("LpfTable: segment_len < 2");
    lpf_.assign(hi - lo + 1, 0);
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi)));
    while ((root + 1) * (root + 1) <= hi) ++root;
    const std::vector<u32> small = primes_upto(root);
    for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += segment_len) {
        const u64 seg_hi = std::min(hi, seg_lo + segment_len - 1);
        for (u32 p : small) {
            // composites only: every composite with least factor p is >= p^2
            u64 start = ((seg_lo + p - 1) / p) * p;
            if (start < static_cast<u64>(p) * p) start = static_cast<u64>(p) * p;
            for (u64 m = start; m <= seg_hi; m += p) {
                if (lpf_[m - lo_] == 0) lpf_[m - lo_] = p;
            }
        }
        for (u64 m = seg_lo; m <= seg_hi; ++m) {
            if (lpf_[m - lo_] == 0 && m > 1) lpf_[m - lo_] = static_cast<u32>(m); // prime
        }
    }
}

u32 LpfTable::lpf(u64 m) const {
    if (!covers(m)) throw std::out_of_range("LpfTable: value outside range");
    if (m == 1) return 1;
    return lpf_[m - lo_];
}

namespace {

void push_factor(Factorization& f, u64 p, unsigned e) {
    f.factors.push_back({p, e});
}

Factorization factorize_trial(u64 m) {
    Factorization out;
    out.value = m;
    if (m <= 1) {
        if (m == 0) throw std::invalid_argument("factorize: m must be positive");
        return out;
    }
    u64 rest = m;
    for (u64 p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p == 0) {
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            push_factor(out, p, e);
        }
    }
    if (rest > 1) push_factor(out, rest, 1);
    return out;
}

} // namespace

Factorization factorize(u64 m) { return factorize_trial(m); }

Factorization factorize(u64 m, const LpfTable& hint) {
    if (m == 0) throw std::invalid_argument("factorize: m must be positive");
    Factorization out;
    out.value = m;
    u64 rest = m;
    // peel factors while the residual stays inside the table, then finish by
    // trial division
    while (rest > 1 && hint.covers(rest)) {
        const u64 p = hint.lpf(rest);
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        push_factor(out, p, e);
    }
    if (rest > 1) {
        Factorization tail = factorize_trial(rest);
        for (const auto& f : tail.factors) push_factor(out, f.prime, f.exponent);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.prime < b.prime; });
    return out;
}

int mobius(u64 m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be positive");
    if (testhooks::mobius_override_m != 0 && m == testhooks::mobius_override_m)
        return testhooks::mobius_override_value;
    const Factorization f = factorize(m);
    if (!f.squarefree()) return 0;
    return (f.omega() % 2 == 0) ? 1 : -1;
}

u64 euler_phi(u64 m) {
    if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
    u64 out = m;
    for (const auto& f : factorize(m).factors) out = out / f.prime * (f.prime - 1);
    return out;
}

u64 num_squarefree_divisors(u64 m) {
    if (m == 0) throw std::invalid_argument("W: m must be positive");
    return u64(1) << factorize(m).omega();
}

u64 radical(u64 m) {
    if (m == 0) throw std::invalid_argument("radical: m must be positive");
    return factorize(m).radical();
}

u64 coprime_part(u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("coprime_part: arguments must be positive");
    return a / gcd_u64(a, b);
}

namespace {

// minimal exact rational on i64, enough for the T(r, n) accumulation
struct Rat {
    i64 num = 0;
    i64 den = 1;

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    void add(i64 n, i64 d) {
        num = num * d + n * den;
        den *= d;
        normalize();
    }
};

} // namespace

u64 t_sum(u64 r, u64 n) {
    if (r == 0 || n == 0) throw std::invalid_argument("t_sum: arguments must be positive");
    Rat acc;
    for (u64 t : factorize(r).divisors()) {
        const u64 tn = coprime_part(t, n);
        const int mu = mobius(tn);
        if (mu == 0) continue;
        // |mu(t_(n))| / phi(t_(n)) * phi(t)
        acc.add(static_cast<i64>(euler_phi(t)), static_cast<i64>(euler_phi(tn)));
    }
    if (acc.den != 1 || acc.num < 0)
        throw std::logic_error("t_sum: accumulated value is not a positive integer (r=" +
                               std::to_string(r) + ", n=" + std::to_string(n) + ")");
    return static_cast<u64>(acc.num);
}

u64 t_closed(u64 r, u64 n) {
    if (r == 0 || n == 0) throw std::invalid_argument("t_closed: arguments must be positive");
    const u64 g = gcd_u64(r, n);
    return g * num_squarefree_divisors(gcd_u64(r, coprime_part(r, n)));
}

long double lemma52_constant(const Factorization& t_factors, unsigned a) {
    if (a == 0) throw std::invalid_argument("lemma52_constant: a must be positive");
    const long double cutoff = std::pow(2.0L, static_cast<long double>(a));
    long double c = 1.0L;
    for (const auto& f : t_factors.factors) {
        if (static_cast<long double>(f.prime) <= cutoff)
            c *= 2.0L / std::pow(static_cast<long double>(f.prime), 1.0L / a);
    }
    return c;
}

SubsetMax max_c6() {
    // each prime p < 64 multiplies the constant by 2 / p^(1/6) > 1, so the
    // maximum over subsets is attained by taking every prime <= 2^6
    SubsetMax out;
    for (u32 p : primes_upto(64)) {
        const long double gain = 2.0L / std::pow(static_cast<long double>(p), 1.0L / 6.0L);
        if (gain > 1.0L) {
            out.value *= gain;
            out.primes.push_back(p);
        }
    }
    return out;
}

} // namespace rnfree::arith
