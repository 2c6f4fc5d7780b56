#include "rnfree/identity_checks.hpp"

#include <cmath>

#include "rnfree/chars.hpp"
#include "rnfree/freeness.hpp"
#include "rnfree/sweep.hpp"

namespace rnfree::checks {

namespace {

constexpr long double kTol = 1e-6L;

SuiteResult t_identity_suite(const IdentityOptions& opts) {
    SuiteResult res{"T(r,n) divisor sum equals closed form", true, 0, ""};
    for (u64 r = 1; r <= opts.t_rmax && res.pass; ++r) {
        for (u64 n = 1; n <= opts.t_nmax; ++n) {
            ++res.cases;
            u64 lhs = 0;
            bool threw = false;
            try {
                lhs = arith::t_sum(r, n);
            } catch (const std::logic_error& e) {
                threw = true;
                res.detail = e.what();
            }
            if (threw || lhs != arith::t_closed(r, n)) {
                res.pass = false;
                if (res.detail.empty())
                    res.detail = "mismatch at r=" + std::to_string(r) + ", n=" + std::to_string(n);
                break;
            }
        }
    }
    return res;
}

SuiteResult indicator_suite(const IdentityOptions& opts) {
    SuiteResult res{"(r,n)-free indicator equals gcd test", true, 0, ""};
    sweep::for_each_odd_prime_power(4, opts.qmax, [&](u64 q, u64 p, unsigned k) {
        if (!res.pass) return;
        const gf::Field f = gf::Field::build(p, k);
        const chars::CharEvaluator ev(f);
        for (u64 n : f.prime_power().qm1_factors.divisors()) {
            for (u64 r : arith::factorize(f.qm1() / n).divisors()) {
                for (gf::Elem h = 0; h < q && res.pass; ++h) {
                    ++res.cases;
                    const long double ind = ev.indicator_rn(h, r, n);
                    const int expect = freeness::is_rn_free(f, h, r, n) ? 1 : 0;
                    if (std::abs(ind - expect) >= kTol) {
                        res.pass = false;
                        res.detail = "q=" + std::to_string(q) + " h=" + std::to_string(h) +
                                     " r=" + std::to_string(r) + " n=" + std::to_string(n);
                    }
                }
            }
        }
    });
    return res;
}

SuiteResult order_indicator_suite(const IdentityOptions& opts) {
    SuiteResult res{"order indicators (both forms) equal the direct test", true, 0, ""};
    sweep::for_each_odd_prime_power(4, opts.qmax, [&](u64 q, u64 p, unsigned k) {
        if (!res.pass) return;
        const gf::Field f = gf::Field::build(p, k);
        const chars::CharEvaluator ev(f);
        for (u64 N : f.prime_power().qm1_factors.divisors()) {
            for (gf::Elem h = 0; h < q && res.pass; ++h) {
                ++res.cases;
                const int direct = (h != 0 && f.element_order(h) == N) ? 1 : 0;
                if (std::abs(ev.carlitz(h, N) - direct) >= kTol ||
                    std::abs(ev.carlitz_alt(h, N) - direct) >= kTol) {
                    res.pass = false;
                    res.detail = "q=" + std::to_string(q) + " h=" + std::to_string(h) +
                                 " N=" + std::to_string(N);
                }
            }
        }
    });
    return res;
}

SuiteResult radical_suite(const IdentityOptions& opts) {
    SuiteResult res{"(r,n)-freeness depends only on radical(r)", true, 0, ""};
    sweep::for_each_odd_prime_power(4, opts.qmax, [&](u64 q, u64 p, unsigned k) {
        if (!res.pass) return;
        const gf::Field f = gf::Field::build(p, k);
        for (u64 n : f.prime_power().qm1_factors.divisors()) {
            for (u64 r : arith::factorize(f.qm1() / n).divisors()) {
                for (gf::Elem h = 0; h < q && res.pass; ++h) {
                    ++res.cases;
                    if (!freeness::radical_reduction_check(f, h, r, n)) {
                        res.pass = false;
                        res.detail = "q=" + std::to_string(q) + " h=" + std::to_string(h) +
                                     " r=" + std::to_string(r) + " n=" + std::to_string(n);
                    }
                }
            }
        }
    });
    return res;
}

} // namespace

std::vector<SuiteResult> run_identity_suites(const IdentityOptions& opts) {
    return {t_identity_suite(opts), indicator_suite(opts), order_indicator_suite(opts),
            radical_suite(opts)};
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace rnfree::checks
