#include "rnfree/chars.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rnfree::chars {

CharValue char_eval(const MultChar& chi, Elem h) {
    if (h == 0) return {true, 0};
    const u64 qm1 = chi.field->qm1();
    return {false, chi.m % qm1 * chi.field->dlog(h) % qm1};
}

std::vector<MultChar> characters_of_order(const Field& f, u64 t) {
    if (t == 0 || f.qm1() % t != 0)
        throw std::invalid_argument("characters_of_order: t must divide q-1");
    std::vector<MultChar> out;
    const u64 step = f.qm1() / t;
    for (u64 j = 1; j <= t; ++j) {
        if (gcd_u64(j, t) == 1) out.push_back({&f, j * step % f.qm1()});
    }
    return out;
}

std::complex<long double> CharSumAccumulator::evaluate() const {
    long double re = 0.0L, im = 0.0L;
    for (u64 e = 0; e < modulus_; ++e) {
        if (counts_[e] == 0) continue;
        const long double angle =
            2.0L * std::numbers::pi_v<long double> * static_cast<long double>(e) / modulus_;
        re += static_cast<long double>(counts_[e]) * std::cos(angle);
        im += static_cast<long double>(counts_[e]) * std::sin(angle);
    }
    return {re, im};
}

CharEvaluator::CharEvaluator(const Field& f) : field_(&f) {
    const u64 qm1 = f.qm1();
    cos_.resize(qm1);
    sin_.resize(qm1);
    for (u64 e = 0; e < qm1; ++e) {
        const long double angle =
            2.0L * std::numbers::pi_v<long double> * static_cast<long double>(e) / qm1;
        cos_[e] = std::cos(angle);
        sin_[e] = std::sin(angle);
    }
}

int CharEvaluator::subgroup_indicator(u64 t, Elem h) const {
    const u64 qm1 = field_->qm1();
    if (t == 0 || qm1 % t != 0)
        throw std::invalid_argument("subgroup_indicator: t must divide q-1");
    if (h == 0) throw std::invalid_argument("subgroup_indicator: h must be nonzero");
    const u64 e = field_->dlog(h);

    // characters of order dividing t are eta_{i(q-1)/t}, i = 0..t-1
    std::complex<long double> sum = 0.0L;
    const u64 step = qm1 / t;
    for (u64 i = 0; i < t; ++i) sum += root(i * step % qm1 * (e % qm1) % qm1);
    const long double s0 = (sum / static_cast<long double>(t)).real();

    const int via_charsum = s0 > 0.5L ? 1 : 0;
    const int via_dlog = (e % t == 0) ? 1 : 0;
    if (std::abs(s0 - via_dlog) > 1e-6L || via_charsum != via_dlog)
        throw std::logic_error("subgroup_indicator: character sum disagrees with dlog test (t=" +
                               std::to_string(t) + ")");
    return via_dlog;
}

long double CharEvaluator::indicator_rn(Elem h, u64 r, u64 n) const {
    const u64 qm1 = field_->qm1();
    if (n == 0 || qm1 % n != 0)
        throw std::invalid_argument("indicator_rn: n must divide q-1");
    if (r == 0 || (qm1 / n) % r != 0)
        throw std::invalid_argument("indicator_rn: r must divide (q-1)/n");
    if (h == 0) return 0.0L; // eta(0) = 0 for every character
    const u64 e = field_->dlog(h);

    std::complex<long double> acc = 0.0L;
    for (u64 t : arith::factorize(r * n).divisors()) {
        const u64 tn = arith::coprime_part(t, n);
        const int mu = arith::mobius(tn);
        if (mu == 0) continue;
        const long double weight =
            static_cast<long double>(mu) / static_cast<long double>(arith::euler_phi(tn));
        std::complex<long double> inner = 0.0L;
        const u64 step = qm1 / t;
        for (u64 j = 1; j <= t; ++j) {
            if (gcd_u64(j, t) == 1) inner += root(j * step % qm1 * (e % qm1) % qm1);
        }
        acc += weight * inner;
    }
    const long double scale = static_cast<long double>(arith::euler_phi(r)) /
                              (static_cast<long double>(r) * static_cast<long double>(n));
    return scale * acc.real();
}

long double CharEvaluator::carlitz(Elem h, u64 N) const {
    const u64 qm1 = field_->qm1();
    if (N == 0 || qm1 % N != 0) throw std::invalid_argument("carlitz: N must divide q-1");
    if (h == 0) return 0.0L;
    const u64 e = field_->dlog(h);

    std::complex<long double> acc = 0.0L;
    for (u64 d : arith::factorize(N).divisors()) {
        const int mu = arith::mobius(d);
        if (mu == 0) continue;
        const u64 t = d * (qm1 / N); // characters of order dividing d(q-1)/N
        std::complex<long double> inner = 0.0L;
        const u64 step = qm1 / t;
        for (u64 i = 0; i < t; ++i) inner += root(i * step % qm1 * (e % qm1) % qm1);
        acc += static_cast<long double>(mu) / static_cast<long double>(d) * inner;
    }
    return static_cast<long double>(N) / static_cast<long double>(qm1) * acc.real();
}

long double CharEvaluator::carlitz_alt(Elem h, u64 N) const {
    const u64 qm1 = field_->qm1();
    if (N == 0 || qm1 % N != 0) throw std::invalid_argument("carlitz_alt: N must divide q-1");
    if (h == 0) return 0.0L;
    const u64 e = field_->dlog(h);
    const u64 n = qm1 / N;

    std::complex<long double> acc = 0.0L;
    for (u64 t : field_->prime_power().qm1_factors.divisors()) {
        const u64 tn = arith::coprime_part(t, n);
        const int mu = arith::mobius(tn);
        if (mu == 0) continue;
        const long double weight =
            static_cast<long double>(mu) / static_cast<long double>(arith::euler_phi(tn));
        std::complex<long double> inner = 0.0L;
        const u64 step = qm1 / t;
        for (u64 j = 1; j <= t; ++j) {
            if (gcd_u64(j, t) == 1) inner += root(j * step % qm1 * (e % qm1) % qm1);
        }
        acc += weight * inner;
    }
    // prefactor phi(N)/(N*n) = phi(N)/(q-1), the specialization of the
    // I_{r,n} prefactor phi(r)/(rn) at r = (q-1)/n
    return static_cast<long double>(arith::euler_phi(N)) / static_cast<long double>(qm1) *
           acc.real();
}

CharSumAccumulator CharEvaluator::char_sum_G(std::span<const Elem> f_coeffs,
                                             std::span<const Elem> F_coeffs, const MultChar& eta,
                                             const MultChar& chi) const {
    const u64 qm1 = field_->qm1();
    CharSumAccumulator acc(qm1);
    for (Elem w = 0; w < field_->q(); ++w) {
        const Elem fv = field_->eval_poly(f_coeffs, w);
        if (fv == 0) continue;
        const Elem Fv = field_->eval_poly(F_coeffs, w);
        if (Fv == 0) continue;
        const u64 e = (eta.m % qm1 * field_->dlog(fv) + chi.m % qm1 * field_->dlog(Fv)) % qm1;
        acc.add_exponent(e);
    }
    return acc;
}

CharSumAccumulator CharEvaluator::char_sum(const MultChar& chi,
                                           std::span<const Elem> F_coeffs) const {
    const u64 qm1 = field_->qm1();
    CharSumAccumulator acc(qm1);
    for (Elem w = 0; w < field_->q(); ++w) {
        const Elem Fv = field_->eval_poly(F_coeffs, w);
        if (Fv == 0) continue;
        acc.add_exponent(chi.m % qm1 * field_->dlog(Fv) % qm1);
    }
    return acc;
}

int subgroup_indicator(const Field& f, u64 t, Elem h) {
    return CharEvaluator(f).subgroup_indicator(t, h);
}

long double indicator_rn_charsum(const Field& f, Elem h, u64 r, u64 n) {
    return CharEvaluator(f).indicator_rn(h, r, n);
}

long double carlitz_indicator(const Field& f, Elem h, u64 N) {
    return CharEvaluator(f).carlitz(h, N);
}

long double carlitz_indicator_alt(const Field& f, Elem h, u64 N) {
    return CharEvaluator(f).carlitz_alt(h, N);
}

} // namespace rnfree::chars
