#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rnfree/gf.hpp"

namespace rnfree::chars {

using gf::Elem;
using gf::Field;

// The character eta_m maps g^j to zeta^(m*j) where g is the field generator
// and zeta the principal (q-1)-th root of unity; m = 0 is trivial.
struct MultChar {
    const Field* field = nullptr;
    u64 m = 0;

    u64 order() const { return field->qm1() / gcd_u64(field->qm1(), m % field->qm1()); }
    bool trivial() const { return m % field->qm1() == 0; }
    static MultChar trivial_char(const Field& f) { return {&f, 0}; }
};

// eta(h): either the absorbing zero (h = 0) or a root of unity zeta^exponent
struct CharValue {
    bool is_zero = true;
    u64 exponent = 0;
};

CharValue char_eval(const MultChar& chi, Elem h);

// characters of exact order t, enumerated as eta_{j(q-1)/t} with gcd(j,t)=1,
// j ascending
std::vector<MultChar> characters_of_order(const Field& f, u64 t);

// Exact character-sum representation: integer tallies of exponents of zeta.
// Floating point only enters when the tally is evaluated.
class CharSumAccumulator {
  public:
    explicit CharSumAccumulator(u64 modulus) : counts_(modulus, 0), modulus_(modulus) {}

    void add_exponent(u64 e) { ++counts_[e % modulus_]; }
    u64 modulus() const { return modulus_; }
    const std::vector<i64>& counts() const { return counts_; }

    std::complex<long double> evaluate() const;
    long double magnitude() const { return std::abs(evaluate()); }

  private:
    std::vector<i64> counts_;
    u64 modulus_;
};

// Shared root-of-unity table plus the character-sum forms of the indicator
// functions over one field.
class CharEvaluator {
  public:
    explicit CharEvaluator(const Field& f);

    const Field& field() const { return *field_; }

    // 1 iff h = g^t for some g, computed both by character sum and by the
    // dlog divisibility test; throws std::logic_error if the two disagree
    int subgroup_indicator(u64 t, Elem h) const;

    // I_{r,n}(h), the (r,n)-free indicator as a divisor/character double sum
    long double indicator_rn(Elem h, u64 r, u64 n) const;

    // O_N via the Moebius-over-divisors-of-N form
    long double carlitz(Elem h, u64 N) const;
    // O_N via the Moebius-inverted form summing over t | q-1
    long double carlitz_alt(Elem h, u64 N) const;

    // sum over w of eta(f(w)) * chi(F(w)), exact tally
    CharSumAccumulator char_sum_G(std::span<const Elem> f_coeffs, std::span<const Elem> F_coeffs,
                                  const MultChar& eta, const MultChar& chi) const;
    // sum over w of chi(F(w))
    CharSumAccumulator char_sum(const MultChar& chi, std::span<const Elem> F_coeffs) const;

    std::complex<long double> root(u64 e) const {
        e %= field_->qm1();
        return {cos_[e], sin_[e]};
    }

  private:
    const Field* field_;
    std::vector<long double> cos_;
    std::vector<long double> sin_;
};

// one-shot conveniences (build a CharEvaluator internally)
int subgroup_indicator(const Field& f, u64 t, Elem h);
long double indicator_rn_charsum(const Field& f, Elem h, u64 r, u64 n);
long double carlitz_indicator(const Field& f, Elem h, u64 N);
long double carlitz_indicator_alt(const Field& f, Elem h, u64 N);

} // namespace rnfree::chars
