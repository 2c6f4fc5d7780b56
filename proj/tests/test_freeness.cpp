#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rnfree/chars.hpp"
#include "rnfree/freeness.hpp"

using namespace rnfree;
using namespace rnfree::freeness;

namespace {

// definitional test from the subgroup characterization: h is an n-th power
// but not an (np)-th power for any prime p | r
bool oracle_is_rn_free(const Field& f, Elem h, u64 r, u64 n) {
    if (h == 0) return false;
    const u64 e = f.dlog(h);
    if (e % n != 0) return false;
    for (const auto& fac : arith::factorize(r).factors) {
        if (e % (n * fac.prime) == 0) return false;
    }
    return true;
}

std::vector<gf::PrimePower> odd_prime_powers_upto(u64 hi) {
    std::vector<gf::PrimePower> out;
    for (u64 q = 5; q <= hi; q += 2) {
        const auto f = arith::factorize(q);
        if (f.omega() == 1) out.push_back(gf::PrimePower::make(f.factors[0].prime, f.factors[0].exponent));
    }
    return out;
}

} // namespace

TEST_CASE("is_rn_free examples in F_13") {
    const Field f = Field::build(13, 1);
    CHECK(is_rn_free(f, 4, 3, 2));
    CHECK_FALSE(is_rn_free(f, 2, 3, 2)); // primitive, outside C_6
    for (Elem h = 1; h < 13; ++h) CHECK(is_rn_free(f, h, 1, 1));
    CHECK_FALSE(is_rn_free(f, 0, 1, 1));
    CHECK_THROWS_AS(is_rn_free(f, 1, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_rn_free(f, 1, 1, 5), std::invalid_argument);
}

TEST_CASE("is_rn_free agrees with the definitional test exhaustively") {
    for (const auto& pp : odd_prime_powers_upto(121)) {
        const Field f = Field::build(pp.p, pp.k);
        for (u64 n : pp.qm1_factors.divisors()) {
            for (u64 r : arith::factorize(f.qm1() / n).divisors()) {
                for (Elem h = 0; h < f.q(); ++h)
                    CHECK(is_rn_free(f, h, r, n) == oracle_is_rn_free(f, h, r, n));
            }
        }
    }
}

TEST_CASE("radical reduction") {
    const Field f13 = Field::build(13, 1);
    CHECK(radical_reduction_check(f13, 4, 4, 1));
    CHECK(radical_reduction_check(f13, 4, 3, 2)); // square-free r, trivially equal

    const Field f25 = Field::build(5, 2);
    for (Elem h = 1; h < 25; ++h) CHECK(radical_reduction_check(f25, h, 8, 3));

    for (const auto& pp : odd_prime_powers_upto(81)) {
        const Field f = Field::build(pp.p, pp.k);
        for (u64 n : pp.qm1_factors.divisors()) {
            for (u64 r : arith::factorize(f.qm1() / n).divisors()) {
                for (Elem h = 0; h < f.q(); ++h) CHECK(radical_reduction_check(f, h, r, n));
            }
        }
    }
}

TEST_CASE("distinct root count") {
    const Field f5 = Field::build(5, 1);
    const ElemPoly x{0, 1};
    const ElemPoly cubic{0, f5.from_int(-1), 0, 1}; // x^3 - x
    CHECK(distinct_root_count(f5, cubic) == 3);
    CHECK(distinct_root_count(f5, gf::poly_mul(f5, x, cubic)) == 3); // x^2(x^2-1)
    CHECK(distinct_root_count(f5, ElemPoly{2, 0, 1}) == 2);          // irreducible quadratic
}

TEST_CASE("PairCountSpec validation") {
    const Field f5 = Field::build(5, 1);
    const ElemPoly x{0, 1};
    const ElemPoly cubic{0, f5.from_int(-1), 0, 1};

    const PairCountSpec ok = PairCountSpec::make(f5, x, cubic, 1, 1, 1, 1);
    CHECK(ok.D == 2);

    CHECK_THROWS_AS(PairCountSpec::make(f5, ElemPoly{3}, cubic, 1, 1, 1, 1),
                    std::invalid_argument); // constant f
    CHECK_THROWS_AS(PairCountSpec::make(f5, ElemPoly{0, 0, 1}, cubic, 1, 1, 1, 1),
                    std::invalid_argument); // x^2 not square-free
    CHECK_THROWS_AS(PairCountSpec::make(f5, x, ElemPoly{0, 3}, 1, 1, 1, 1),
                    std::invalid_argument); // ratio constant
    CHECK_THROWS_AS(PairCountSpec::make(f5, x, cubic, 3, 1, 1, 1),
                    std::invalid_argument); // 3 does not divide 4
}

TEST_CASE("count_pairs examples") {
    const Field f5 = Field::build(5, 1);
    const ElemPoly x{0, 1};
    const ElemPoly cubic5{0, f5.from_int(-1), 0, 1};
    CHECK(count_pairs(f5, PairCountSpec::make(f5, x, cubic5, 1, 1, 1, 1)) == 2);

    const Field f11 = Field::build(11, 1);
    const ElemPoly cubic11{0, f11.from_int(-1), 0, 1};
    const PairCountSpec spec11 = PairCountSpec::make(f11, x, cubic11, 10, 1, 5, 2);
    CHECK(count_pairs(f11, spec11) == 1);
    CHECK(find_free_theta(f11, spec11) == Elem{8});
}

TEST_CASE("pathological multiplicative dependence has no witnesses") {
    // q = 7 = 3 mod 4, f = x, F = 3x with 3 a nonsquare: f*F = 3x^2 is a
    // nonsquare times a square, so f(y), F(y) can never both be (2,1)-free
    const Field f7 = Field::build(7, 1);
    const ElemPoly x{0, 1};
    const ElemPoly lx{0, 3};
    CHECK(count_pairs_raw(f7, x, lx, 2, 1, 2, 1) == 0);
    CHECK_THROWS_AS(PairCountSpec::make(f7, x, lx, 2, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("find_free_theta consistent with count_pairs") {
    for (const auto& pp : odd_prime_powers_upto(49)) {
        const Field f = Field::build(pp.p, pp.k);
        const ElemPoly x{0, 1};
        const ElemPoly shifted_cubic{1, f.from_int(-1), 0, 1}; // x^3 - x + 1
        if (!gf::poly_is_squarefree(f, shifted_cubic)) continue;
        for (u64 n : pp.qm1_factors.divisors()) {
            const u64 r = f.qm1() / n;
            const PairCountSpec spec = PairCountSpec::make(f, x, shifted_cubic, r, n, 1, 1);
            const auto theta = find_free_theta(f, spec);
            CHECK(theta.has_value() == (count_pairs(f, spec) > 0));
            if (theta) {
                CHECK(is_rn_free(f, f.eval_poly(spec.f, *theta), r, n));
            }
        }
    }
}

TEST_CASE("count_pairs equals the indicator-product sum") {
    for (const auto& pp : odd_prime_powers_upto(49)) {
        const Field f = Field::build(pp.p, pp.k);
        const chars::CharEvaluator ev(f);
        const ElemPoly x{0, 1};
        const ElemPoly quad{f.from_int(2), 1, 1}; // x^2 + x + 2
        if (!gf::poly_is_squarefree(f, quad)) continue;
        for (u64 n : pp.qm1_factors.divisors()) {
            for (u64 N : pp.qm1_factors.divisors()) {
                const u64 r = f.qm1() / n;
                const u64 R = arith::radical(f.qm1() / N);
                const PairCountSpec spec = PairCountSpec::make(f, x, quad, r, n, R, N);
                long double acc = 0.0L;
                for (Elem w = 0; w < f.q(); ++w) {
                    acc += ev.indicator_rn(f.eval_poly(spec.f, w), r, n) *
                           ev.indicator_rn(f.eval_poly(spec.F, w), R, N);
                }
                CHECK(std::abs(acc - static_cast<long double>(count_pairs(f, spec))) < 1e-3L);
            }
        }
    }
}
