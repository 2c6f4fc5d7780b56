#include "rnfree/freeness.hpp"

#include <stdexcept>

namespace rnfree::freeness {

void check_freeness_pair(const Field& f, u64 r, u64 n) {
    if (n == 0 || f.qm1() % n != 0)
        throw std::invalid_argument("freeness: n must divide q-1");
    if (r == 0 || (f.qm1() / n) % r != 0)
        throw std::invalid_argument("freeness: r must divide (q-1)/n");
}

bool is_rn_free(const Field& f, Elem h, u64 r, u64 n) {
    check_freeness_pair(f, r, n);
    if (h == 0) return false;
    const u64 cofactor = gcd_u64(f.qm1(), f.dlog(h)); // (q-1) / ord(h)
    return gcd_u64(r * n, cofactor) == n;
}

bool radical_reduction_check(const Field& f, Elem h, u64 r, u64 n) {
    return is_rn_free(f, h, r, n) == is_rn_free(f, h, arith::radical(r), n);
}

unsigned distinct_root_count(const Field& f, const ElemPoly& poly) {
    const ElemPoly p = gf::poly_trimmed(poly);
    if (gf::poly_degree(p) < 1)
        throw std::invalid_argument("distinct_root_count: degree must be >= 1");
    const ElemPoly rep = gf::poly_gcd(f, p, gf::poly_derivative(f, p));
    return static_cast<unsigned>(gf::poly_degree(p) - gf::poly_degree(rep));
}

PairCountSpec PairCountSpec::make(const Field& field, ElemPoly f, ElemPoly F, u64 r, u64 n, u64 R,
                                  u64 N) {
    f = gf::poly_trimmed(std::move(f));
    F = gf::poly_trimmed(std::move(F));
    if (gf::poly_degree(f) < 1 || gf::poly_degree(F) < 1)
        throw std::invalid_argument("PairCountSpec: f and F must be non-constant");
    if (!gf::poly_is_squarefree(field, f) || !gf::poly_is_squarefree(field, F))
        throw std::invalid_argument("PairCountSpec: f and F must be square-free");
    if (gf::poly_is_constant_multiple(field, f, F))
        throw std::invalid_argument("PairCountSpec: ratio f/F must not be constant");
    check_freeness_pair(field, r, n);
    check_freeness_pair(field, R, N);

    PairCountSpec spec;
    spec.f = std::move(f);
    spec.F = std::move(F);
    spec.r = r;
    spec.n = n;
    spec.R = R;
    spec.N = N;
    spec.D = distinct_root_count(field, gf::poly_mul(field, spec.f, spec.F)) - 1;
    return spec;
}

u64 count_pairs_raw(const Field& field, std::span<const Elem> f, std::span<const Elem> F, u64 r,
                    u64 n, u64 R, u64 N) {
    u64 count = 0;
    for (Elem theta = 0; theta < field.q(); ++theta) {
        if (is_rn_free(field, field.eval_poly(f, theta), r, n) &&
            is_rn_free(field, field.eval_poly(F, theta), R, N))
            ++count;
    }
    return count;
}

u64 count_pairs(const Field& field, const PairCountSpec& spec) {
    return count_pairs_raw(field, spec.f, spec.F, spec.r, spec.n, spec.R, spec.N);
}

std::optional<Elem> find_free_theta(const Field& field, const PairCountSpec& spec) {
    for (Elem theta = 0; theta < field.q(); ++theta) {
        if (is_rn_free(field, field.eval_poly(spec.f, theta), spec.r, spec.n) &&
            is_rn_free(field, field.eval_poly(spec.F, theta), spec.R, spec.N))
            return theta;
    }
    return std::nullopt;
}

} // namespace rnfree::freeness
