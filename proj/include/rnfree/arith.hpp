#pragma once

#include <optional>
#include <vector>

#include "rnfree/ints.hpp"

namespace rnfree::arith {

struct FactorEntry {
    u64 prime = 0;
    unsigned exponent = 0;
    bool operator==(const FactorEntry&) const = default;
};

// Prime decomposition value = prod prime^exponent, primes strictly increasing.
struct Factorization {
    u64 value = 1;
    std::vector<FactorEntry> factors;

    unsigned omega() const { return static_cast<unsigned>(factors.size()); }
    u64 radical() const;
    bool squarefree() const;
    std::vector<u64> divisors() const; // ascending
    std::vector<u64> prime_list() const;
    void check() const; // throws std::logic_error on broken invariants
};

// Least-prime-factor table for a contiguous range [lo, hi]. Construction is
// segmented so peak scratch memory stays bounded; the table itself holds one
// 32-bit entry per integer in the range.
class LpfTable {
  public:
    LpfTable(u64 lo, u64 hi, u64 segment_len = u64(1) << 22);

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }
    bool covers(u64 m) const { return m >= lo_ && m <= hi_; }
    u32 lpf(u64 m) const;
    bool is_prime(u64 m) const { return m > 1 && lpf(m) == m; }

  private:
    u64 lo_;
    u64 hi_;
    std::vector<u32> lpf_;
};

// Primes <= n in ascending order (simple sieve; n is expected to be modest,
// the sweep only needs primes up to sqrt(range_hi) ~ 1e4).
std::vector<u32> primes_upto(u64 n);

Factorization factorize(u64 m);
Factorization factorize(u64 m, const LpfTable& hint);

int mobius(u64 m);
u64 euler_phi(u64 m);
// W(m) = 2^omega(m), the number of square-free divisors
u64 num_squarefree_divisors(u64 m);
u64 radical(u64 m);
// a_(b) = a / gcd(a, b)
u64 coprime_part(u64 a, u64 b);

// T(r, n) = sum over t | r of |mu(t_(n))| / phi(t_(n)) * phi(t), accumulated
// as an exact rational; throws std::logic_error if the sum is not integral.
u64 t_sum(u64 r, u64 n);
// closed form gcd(r, n) * W(gcd(r, r_(n))); equal to t_sum for all inputs
u64 t_closed(u64 r, u64 n);

// c_{t,a} = 2^j / (p_1 ... p_j)^(1/a) over the distinct primes of t that are <= 2^a
long double lemma52_constant(const Factorization& t_factors, unsigned a);

struct SubsetMax {
    long double value = 1.0L;
    std::vector<u64> primes; // maximizing prime set, ascending
};
// max of 2^j / (p_1 ... p_j)^(1/6) over subsets of the primes <= 2^6
SubsetMax max_c6();

// Verification-harness hook: force mobius(m) to a fixed value for one m.
// Used by the CLI's negative-control fault injection; disabled when m == 0.
namespace testhooks {
extern u64 mobius_override_m;
extern int mobius_override_value;
} // namespace testhooks

} // namespace rnfree::arith
