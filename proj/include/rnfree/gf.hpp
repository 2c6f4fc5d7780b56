#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "rnfree/arith.hpp"
#include "rnfree/ints.hpp"

namespace rnfree::gf {

// Field elements are canonical indices: the coefficient vector (c_0,...,c_{k-1})
// of the representative polynomial encodes as sum c_i p^i. Index 0 is the zero
// element; for prime fields the index is the residue itself.
using Elem = u64;

struct FieldLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q = p^k for an odd prime p, with the factorization of q-1 attached
struct PrimePower {
    u64 p = 0;
    unsigned k = 0;
    u64 q = 0;
    arith::Factorization qm1_factors;

    static PrimePower make(u64 p, unsigned k);
};

class Field {
  public:
    static constexpr u64 kDefaultTableLimit = u64(1) << 25;

    // Deterministic construction: modulus is the lexicographically smallest
    // monic irreducible of degree k (coefficients compared low-degree first),
    // generator the order-(q-1) element of smallest canonical index.
    static Field build(u64 p, unsigned k, u64 table_limit = kDefaultTableLimit);

    const PrimePower& prime_power() const { return pp_; }
    u64 p() const { return pp_.p; }
    unsigned k() const { return pp_.k; }
    u64 q() const { return pp_.q; }
    u64 qm1() const { return pp_.q - 1; }
    Elem generator() const { return gen_; }
    // monic modulus coefficients, size k+1, constant term first
    const std::vector<u32>& modulus() const { return mod_; }

    u64 dlog(Elem h) const {
        if (h == 0) throw std::invalid_argument("dlog: zero element");
        return dlog_[h];
    }
    bool exponent_is_primitive(u64 e) const { return gcd_u64(e % qm1(), qm1()) == 1; }
    bool is_primitive(Elem h) const { return h != 0 && exponent_is_primitive(dlog_[h]); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, u64 e) const;
    Elem inv(Elem a) const;
    // embed an integer constant (reduced mod p)
    Elem from_int(long long v) const;

    std::vector<u32> coeffs_of(Elem a) const;
    Elem from_coeffs(std::span<const u32> c) const;

    u64 element_order(Elem h) const;
    bool is_n_primitive(Elem h, u64 n) const;

    // Horner evaluation; coeffs[i] multiplies x^i
    Elem eval_poly(std::span<const Elem> coeffs, Elem x) const;

    Field(Field&&) = default;
    Field& operator=(Field&&) = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field() = default;

    PrimePower pp_;
    std::vector<u32> mod_;       // modulus coefficients, size k+1
    std::vector<u32> red_;       // x^k reduced: -mod_[0..k-1] mod p
    Elem gen_ = 0;
    std::vector<u32> dlog_; // size q; dlog_[0] is a sentinel

    std::vector<u32> mul_digits(const std::vector<u32>& a, const std::vector<u32>& b) const;
};

} // namespace rnfree::gf
