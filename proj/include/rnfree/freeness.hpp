#pragma once

#include <optional>
#include <span>

#include "rnfree/gf.hpp"
#include "rnfree/polyops.hpp"

namespace rnfree::freeness {

using gf::Elem;
using gf::ElemPoly;
using gf::Field;

// (r, n) with n | q-1 and r | (q-1)/n; throws std::invalid_argument otherwise
void check_freeness_pair(const Field& f, u64 r, u64 n);

// gcd criterion: h != 0 and gcd(rn, (q-1)/ord(h)) == n
bool is_rn_free(const Field& f, Elem h, u64 r, u64 n);

// (r, n)-freeness depends only on the radical of r; returns whether the two
// verdicts agree (always true, used as a property hook)
bool radical_reduction_check(const Field& f, Elem h, u64 r, u64 n);

// number of distinct roots of poly over its splitting field, as the degree of
// poly / gcd(poly, poly'); valid when no root multiplicity reaches char(F_q)
unsigned distinct_root_count(const Field& f, const ElemPoly& poly);

// Validated input for the pair-count: f, F non-constant square-free with a
// non-constant ratio, (r, n) and (R, N) valid freeness pairs.
struct PairCountSpec {
    ElemPoly f;
    ElemPoly F;
    u64 r = 1, n = 1;
    u64 R = 1, N = 1;
    unsigned D = 1; // distinct roots of f*F minus one

    static PairCountSpec make(const Field& field, ElemPoly f, ElemPoly F, u64 r, u64 n, u64 R,
                              u64 N);
};

// exact count of theta with f(theta) (r,n)-free and F(theta) (R,N)-free
u64 count_pairs(const Field& field, const PairCountSpec& spec);
// same count without the PairCountSpec hypotheses (degenerate inputs allowed)
u64 count_pairs_raw(const Field& field, std::span<const Elem> f, std::span<const Elem> F, u64 r,
                    u64 n, u64 R, u64 N);

// smallest canonical-index witness, or nullopt
std::optional<Elem> find_free_theta(const Field& field, const PairCountSpec& spec);

} // namespace rnfree::freeness
