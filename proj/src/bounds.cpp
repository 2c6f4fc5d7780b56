#include "rnfree/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rnfree::bounds {

namespace {

// sqrt(q) > num/den compared exactly: q * den^2 > num^2. Falls back to wide
// arithmetic when the 128-bit fast path could overflow.
bool sqrt_q_exceeds(u64 q, u128 num, u128 den) {
    if (num < (u128(1) << 63) && den < (u128(1) << 31) && q < (u64(1) << 62)) {
        return static_cast<u128>(q) * den * den > num * num;
    }
    BigUint lhs(q);
    lhs = lhs * BigUint::from_u128(den) * BigUint::from_u128(den);
    const BigUint n = BigUint::from_u128(num);
    return lhs > n * n;
}

u64 w_of(u64 m) { return arith::num_squarefree_divisors(m); }

// shared core: sqrt(q) > D n N W_r W_R * ((s-1) delta_den + 2 delta_num) / delta_num
bool sieve_inequality(u64 q, u64 DnN, u64 w_kr, u64 w_kR, u64 s, u128 delta_num, u128 delta_den) {
    const u128 factor = static_cast<u128>(DnN) * w_kr * w_kR;
    const u128 x_num = (s == 0) ? delta_den : (u128(s - 1) * delta_den + 2 * delta_num);
    return sqrt_q_exceeds(q, factor * x_num, delta_num);
}

} // namespace

void ConditionInput::check() const {
    if (q < 5) throw std::invalid_argument("ConditionInput: q must be >= 5");
    if (D < 1) throw std::invalid_argument("ConditionInput: D must be >= 1");
    if (n == 0 || (q - 1) % n != 0 || N == 0 || (q - 1) % N != 0)
        throw std::invalid_argument("ConditionInput: n, N must divide q-1");
    if (r == 0 || ((q - 1) / n) % r != 0)
        throw std::invalid_argument("ConditionInput: r must divide (q-1)/n");
    if (R == 0 || ((q - 1) / N) % R != 0)
        throw std::invalid_argument("ConditionInput: R must divide (q-1)/N");
}

SieveDecomposition::Delta SieveDecomposition::delta() const {
    // common denominator: product of the distinct primes used on either side
    std::vector<u64> distinct;
    for (u64 p : sieving_r) distinct.push_back(p);
    for (u64 p : sieving_R) distinct.push_back(p);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    u128 den = 1;
    for (u64 p : distinct) {
        den *= p;
        if (den > (u128(1) << 62)) throw std::overflow_error("delta: denominator too large");
    }
    i64 num = static_cast<i64>(den);
    for (u64 p : sieving_r) num -= static_cast<i64>(den / p);
    for (u64 p : sieving_R) num -= static_cast<i64>(den / p);
    return {num, static_cast<u64>(den)};
}

std::vector<u64> SieveDecomposition::flat_primes() const {
    std::vector<u64> out = sieving_r;
    out.insert(out.end(), sieving_R.begin(), sieving_R.end());
    std::sort(out.begin(), out.end(), std::greater<u64>());
    return out;
}

void SieveDecomposition::check_for(const ConditionInput& inp) const {
    auto check_side = [](u64 r, u64 k, const std::vector<u64>& primes) {
        u64 prod = k;
        for (u64 p : primes) {
            if (k % p == 0) throw std::invalid_argument("SieveDecomposition: prime divides core");
            prod *= p;
        }
        if (prod != arith::radical(r))
            throw std::invalid_argument("SieveDecomposition: core * primes != radical");
        if (!arith::factorize(k).squarefree())
            throw std::invalid_argument("SieveDecomposition: core not square-free");
    };
    check_side(inp.r, k_r, sieving_r);
    check_side(inp.R, k_R, sieving_R);
}

bool cor42_condition(const ConditionInput& inp) {
    inp.check();
    const u128 c = static_cast<u128>(inp.D) * inp.n * inp.N * w_of(inp.r) * w_of(inp.R);
    return sqrt_q_exceeds(inp.q, c, 1);
}

bool sieve_bound_condition(const ConditionInput& inp, const SieveDecomposition& dec) {
    inp.check();
    dec.check_for(inp);
    const SieveDecomposition::Delta d = dec.delta();
    if (!d.positive()) throw std::domain_error("sieve_bound_condition: delta <= 0");
    return sieve_inequality(inp.q, inp.D * inp.n * inp.N, w_of(dec.k_r), w_of(dec.k_R),
                            dec.sieve_count(), static_cast<u128>(d.num), d.den);
}

std::optional<SieveDecomposition> choose_sieving_primes(const ConditionInput& inp,
                                                        const std::vector<u64>& r_primes,
                                                        const std::vector<u64>& R_primes) {
    inp.check();
    const u64 DnN = inp.D * inp.n * inp.N;
    const u64 omega_r = r_primes.size();
    const u64 omega_R = R_primes.size();

    // one instance per (prime, side), descending primes, r side first on ties
    struct Instance {
        u64 prime;
        bool r_side;
    };
    std::vector<Instance> instances;
    for (u64 p : r_primes) instances.push_back({p, true});
    for (u64 p : R_primes) instances.push_back({p, false});
    std::sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) {
        if (a.prime != b.prime) return a.prime > b.prime;
        return a.r_side && !b.r_side;
    });

    // delta over the running product of distinct primes taken so far
    u128 delta_num = 1, delta_den = 1;
    u64 last_prime = 0;
    for (u64 s = 0; s <= instances.size(); ++s) {
        if (s > 0) {
            const u64 p = instances[s - 1].prime;
            // delta shrinks monotonically, so once it hits zero we are done
            if (p != last_prime) {
                const u128 scaled = delta_num * p; // extend denominator, subtract 1/p
                if (scaled <= delta_den) break;
                delta_num = scaled - delta_den;
                delta_den *= p;
                last_prime = p;
            } else {
                const u128 dec = delta_den / p; // second side of the same prime
                if (delta_num <= dec) break;
                delta_num -= dec;
            }
            if (delta_den > (u128(1) << 62))
                throw std::overflow_error("choose_sieving_primes: denominator too large");
        }
        u64 u = 0, v = 0;
        for (u64 i = 0; i < s; ++i) (instances[i].r_side ? u : v) += 1;
        const u64 w_kr = u64(1) << (omega_r - u);
        const u64 w_kR = u64(1) << (omega_R - v);
        if (sieve_inequality(inp.q, DnN, w_kr, w_kR, s, delta_num, delta_den)) {
            SieveDecomposition dec;
            dec.k_r = 1;
            dec.k_R = 1;
            for (u64 i = 0; i < s; ++i)
                (instances[i].r_side ? dec.sieving_r : dec.sieving_R).push_back(instances[i].prime);
            for (u64 p : r_primes)
                if (std::find(dec.sieving_r.begin(), dec.sieving_r.end(), p) == dec.sieving_r.end())
                    dec.k_r *= p;
            for (u64 p : R_primes)
                if (std::find(dec.sieving_R.begin(), dec.sieving_R.end(), p) == dec.sieving_R.end())
                    dec.k_R *= p;
            return dec;
        }
    }
    return std::nullopt;
}

std::optional<SieveDecomposition> choose_sieving_primes(const ConditionInput& inp) {
    return choose_sieving_primes(inp, arith::factorize(inp.r).prime_list(),
                                 arith::factorize(inp.R).prime_list());
}

ConditionReport evaluate_conditions(const ConditionInput& inp) {
    ConditionReport rep;
    rep.input = inp;
    rep.w_r = w_of(inp.r);
    rep.w_R = w_of(inp.R);
    rep.cor42_pass = cor42_condition(inp);
    rep.sieve = choose_sieving_primes(inp);
    rep.sieve_pass = rep.sieve.has_value();
    rep.lhs = std::sqrt(static_cast<long double>(inp.q));
    if (rep.sieve) {
        const auto d = rep.sieve->delta();
        const long double delta =
            static_cast<long double>(d.num) / static_cast<long double>(d.den);
        const u64 s = rep.sieve->sieve_count();
        const long double mult = s == 0 ? 1.0L : (s - 1) / delta + 2.0L;
        rep.rhs = static_cast<long double>(inp.D * inp.n * inp.N) * w_of(rep.sieve->k_r) *
                  w_of(rep.sieve->k_R) * mult;
    } else {
        rep.rhs = static_cast<long double>(inp.D * inp.n * inp.N) * rep.w_r * rep.w_R;
    }
    return rep;
}

BigUint analytic_threshold(u64 coefficient) {
    if (coefficient == 0) throw std::invalid_argument("analytic_threshold: coefficient must be positive");
    // branch q = 1 mod 4: q >= (c * 37.47^2 / 2^(1/3))^6 = c^6 * 3747^12 / (4 * 10^24)
    // branch q = 3 mod 4: q >= ((c/2) * 37.47^2)^6  = c^6 * 3747^12 / (64 * 10^24)
    // the first divisor is smaller, so that branch governs
    BigUint num = BigUint::pow(3747, 12);
    for (int i = 0; i < 6; ++i) num.mul_small(coefficient);
    bool inexact = false;
    if (num.div_small(4) != 0) inexact = true;
    if (num.div_small(1000000000000ULL) != 0) inexact = true;
    if (num.div_small(1000000000000ULL) != 0) inexact = true;
    if (inexact) num.add_small(1);
    return num;
}

bool tmin_tmax_check(unsigned t_min, unsigned t_max, u64 coefficient) {
    if (t_min == 0 || t_min > t_max) throw std::invalid_argument("tmin_tmax_check: need 0 < t_min <= t_max");
    // first t_min primes
    std::vector<u32> primes;
    for (u64 bound = 128; primes.size() < t_min; bound *= 2) primes = arith::primes_upto(bound);
    primes.resize(t_min);

    BigUint primorial(1);
    for (u32 p : primes) primorial.mul_small(p);

    for (unsigned n = 0; n < t_min; ++n) {
        // sum of 2/p over the n largest of the first t_min primes
        BigUint den(1), sum(0);
        for (unsigned i = t_min - n; i < t_min; ++i) den.mul_small(primes[i]);
        for (unsigned i = t_min - n; i < t_min; ++i) {
            BigUint term = den;
            term.div_small(primes[i]);
            term.mul_small(2);
            sum = sum + term;
        }
        if (!(sum < den)) continue; // deficiency not positive
        const BigUint dnum = den - sum;

        // sqrt(P) > c * 4^(t_max-n) * ((2n-1) den + 2 dnum) / dnum
        BigUint inner;
        if (n == 0) {
            inner = dnum;
        } else {
            BigUint a = den;
            a.mul_small(2 * n - 1);
            BigUint b = dnum;
            b.mul_small(2);
            inner = a + b;
        }
        BigUint rhs = BigUint::pow(4, t_max - n) * inner;
        rhs.mul_small(coefficient);
        if (primorial * dnum.squared() > rhs.squared()) return true;
    }
    return false;
}

} // namespace rnfree::bounds
