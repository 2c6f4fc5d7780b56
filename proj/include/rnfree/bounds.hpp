#pragma once

#include <optional>
#include <vector>

#include "rnfree/arith.hpp"
#include "rnfree/bigint.hpp"
#include "rnfree/ints.hpp"

namespace rnfree::bounds {

// quantities entering the existence conditions: q and the freeness
// parameters, with D+1 the number of distinct roots of f*F
struct ConditionInput {
    u64 q = 0;
    u64 D = 1;
    u64 n = 1, N = 1;
    u64 r = 1, R = 1;

    void check() const; // throws std::invalid_argument on broken divisibility
};

// radical(r) = k_r * prod(sieving_r), k_r square-free and coprime to the
// sieving primes; same on the R side. A prime may be sieved on both sides.
struct SieveDecomposition {
    u64 k_r = 1, k_R = 1;
    std::vector<u64> sieving_r; // distinct primes, descending
    std::vector<u64> sieving_R;

    // delta = 1 - sum 1/p_i - sum 1/l_i as an exact fraction (num may be <= 0)
    struct Delta {
        i64 num = 1;
        u64 den = 1;
        bool positive() const { return num > 0; }
    };
    Delta delta() const;

    u64 sieve_count() const { return sieving_r.size() + sieving_R.size(); }
    // flat multiset of sieved primes, descending
    std::vector<u64> flat_primes() const;
    void check_for(const ConditionInput& inp) const;
};

// sqrt(q) > D n N W(r) W(R), compared exactly as q > (...)^2
bool cor42_condition(const ConditionInput& inp);

// sqrt(q) > D n N W(k_r) W(k_R) ((u+v-1)/delta + 2), exact rational compare;
// throws std::domain_error if delta <= 0
bool sieve_bound_condition(const ConditionInput& inp, const SieveDecomposition& dec);

// Searches prefixes of the available sieving-prime instances in descending
// prime order (the per-size optimum, since the right-hand side depends only
// on the instance count and delta). Returns the first passing decomposition,
// scanning every feasible size, or nullopt if none passes.
std::optional<SieveDecomposition> choose_sieving_primes(const ConditionInput& inp);
// same, with r and R prefactored (ascending lists of distinct primes)
std::optional<SieveDecomposition> choose_sieving_primes(const ConditionInput& inp,
                                                        const std::vector<u64>& r_primes,
                                                        const std::vector<u64>& R_primes);

struct ConditionReport {
    ConditionInput input;
    u64 w_r = 1, w_R = 1;
    bool cor42_pass = false;
    std::optional<SieveDecomposition> sieve;
    bool sieve_pass = false;
    long double lhs = 0.0L; // sqrt(q), for display
    long double rhs = 0.0L; // best right-hand side reached, for display
};
ConditionReport evaluate_conditions(const ConditionInput& inp);

// Least Q0 such that the generic W-bound existence condition holds for all
// q >= Q0: the stronger congruence branch gives Q0 = ceil(c^6 * 37.47^12 / 4),
// evaluated exactly in decimal fixed point.
BigUint analytic_threshold(u64 coefficient);

// sqrt(p_1...p_{t_min}) > c * 4^(t_max - n) * ((2n-1)/(1 - sum 2/p_i) + 2)
// for some n < t_min with positive deficiency, the sum running over the n
// largest of the first t_min primes. Exact arithmetic throughout.
bool tmin_tmax_check(unsigned t_min, unsigned t_max, u64 coefficient);

} // namespace rnfree::bounds
