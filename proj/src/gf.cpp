#include "rnfree/gf.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace rnfree::gf {

namespace {

bool is_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (u64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// --- polynomial arithmetic over F_p, used before the field tables exist ---

using Poly = std::vector<u32>; // coefficient i multiplies x^i, no trailing zeros

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul_mod(u64 p, const Poly& a, const Poly& b, const Poly& mod) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<u32>((prod[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
    // reduce mod the monic modulus
    const std::size_t k = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > k;) {
        const u64 c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const u64 sub = c * mod[j] % p;
            prod[i - k + j] = static_cast<u32>((prod[i - k + j] + p - sub) % p);
        }
    }
    prod.resize(k);
    poly_trim(prod);
    return prod;
}

Poly poly_pow_mod(u64 p, Poly base, u64 e, const Poly& mod) {
    Poly out{1};
    while (e > 0) {
        if (e & 1) out = poly_mul_mod(p, out, base, mod);
        base = poly_mul_mod(p, base, base, mod);
        e >>= 1;
    }
    return out;
}

Poly poly_mod(u64 p, Poly a, const Poly& m) {
    poly_trim(a);
    const u64 lead_inv = powmod_u64(m.back(), p - 2, p);
    while (poly_deg(a) >= poly_deg(m)) {
        const u64 c = static_cast<u64>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) {
            const u64 sub = c * m[j] % p;
            a[shift + j] = static_cast<u32>((a[shift + j] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(u64 p, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(u64 p, const Poly& f) {
    const unsigned k = static_cast<unsigned>(poly_deg(f));
    if (k == 1) return true;
    if (k <= 3) {
        // degree 2 or 3: reducible iff it has a root
        for (u64 x = 0; x < p; ++x) {
            u64 v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    // generic test: x^(p^k) == x mod f and gcd(x^(p^(k/d)) - x, f) constant
    // for every prime divisor d of k
    const Poly x{0, 1};
    Poly t = x;
    std::vector<Poly> frobenius(k + 1); // frobenius[i] = x^(p^i) mod f
    frobenius[0] = x;
    for (unsigned i = 1; i <= k; ++i) {
        t = poly_pow_mod(p, t, p, f);
        frobenius[i] = t;
    }
    if (frobenius[k] != x) return false;
    for (const auto& fac : arith::factorize(k).factors) {
        Poly diff = frobenius[k / fac.prime];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<u32>((diff[1] + p - 1) % p);
        poly_trim(diff);
        if (poly_deg(poly_gcd(p, f, diff)) > 0) return false;
    }
    return true;
}

// lexicographically smallest monic irreducible of degree k, comparing the
// coefficient sequence (c_0, c_1, ..., c_{k-1})
Poly smallest_irreducible(u64 p, unsigned k) {
    if (k == 1) return Poly{0, 1}; // x
    Poly f(k + 1, 0);
    f[k] = 1;
    std::vector<u32> c(k, 0);
    while (true) {
        for (unsigned i = 0; i < k; ++i) f[i] = c[i];
        if (is_irreducible(p, f)) return f;
        // advance (c_0,...,c_{k-1}) in lex order: last coordinate fastest
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++c[i];
    }
}

} // namespace

PrimePower PrimePower::make(u64 p, unsigned k) {
    if (!is_odd_prime(p)) throw std::invalid_argument("PrimePower: p must be an odd prime");
    if (k == 0) throw std::invalid_argument("PrimePower: k must be >= 1");
    PrimePower pp;
    pp.p = p;
    pp.k = k;
    pp.q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (pp.q > (u64(1) << 62) / p) throw std::invalid_argument("PrimePower: q overflows");
        pp.q *= p;
    }
    pp.qm1_factors = arith::factorize(pp.q - 1);
    return pp;
}

Field Field::build(u64 p, unsigned k, u64 table_limit) {
    Field f;
    f.pp_ = PrimePower::make(p, k);
    if (f.pp_.q > table_limit)
        throw FieldLimitError("Field: q = " + std::to_string(f.pp_.q) +
                              " exceeds table limit " + std::to_string(table_limit));
    const u64 q = f.pp_.q;

    const Poly mod = smallest_irreducible(p, k);
    f.mod_ = mod;
    f.red_.assign(k, 0);
    for (unsigned i = 0; i < k; ++i) f.red_[i] = static_cast<u32>((p - mod[i]) % p);

    // smallest-index element of multiplicative order q-1
    const auto& qm1_primes = f.pp_.qm1_factors.factors;
    f.gen_ = 0;
    f.dlog_.clear();
    for (Elem cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (const auto& fac : qm1_primes) {
            if (f.pow(cand, (q - 1) / fac.prime) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            f.gen_ = cand;
            break;
        }
    }
    if (f.gen_ == 0) throw std::logic_error("Field: no generator found");

    // discrete-log table: dlog[g^e] = e
    f.dlog_.assign(q, 0xFFFFFFFFu);
    if (k == 1) {
        u64 cur = 1;
        for (u64 e = 0; e < q - 1; ++e) {
            f.dlog_[cur] = static_cast<u32>(e);
            cur = cur * f.gen_ % p;
        }
        assert(cur == 1);
    } else {
        const std::vector<u32> gd = f.coeffs_of(f.gen_);
        std::vector<u32> cur(k, 0);
        cur[0] = 1;
        for (u64 e = 0; e < q - 1; ++e) {
            u64 idx = 0;
            for (unsigned i = k; i-- > 0;) idx = idx * p + cur[i];
            assert(f.dlog_[idx] == 0xFFFFFFFFu);
            f.dlog_[idx] = static_cast<u32>(e);
            cur = f.mul_digits(cur, gd);
        }
    }

    return f;
}

std::vector<u32> Field::coeffs_of(Elem a) const {
    std::vector<u32> c(pp_.k, 0);
    for (unsigned i = 0; i < pp_.k; ++i) {
        c[i] = static_cast<u32>(a % pp_.p);
        a /= pp_.p;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const u32> c) const {
    u64 idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= pp_.p) throw std::invalid_argument("from_coeffs: digit out of range");
        idx = idx * pp_.p + c[i];
    }
    return idx;
}

std::vector<u32> Field::mul_digits(const std::vector<u32>& a, const std::vector<u32>& b) const {
    const u64 p = pp_.p;
    const unsigned k = pp_.k;
    std::vector<u64> prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) prod[i + j] += static_cast<u64>(a[i]) * b[j] % p;
    }
    for (unsigned i = 2 * k - 1; i-- > k;) {
        const u64 c = prod[i] % p;
        if (c == 0) continue;
        for (unsigned j = 0; j < k; ++j) prod[i - k + j] += c * red_[j] % p;
    }
    std::vector<u32> out(k);
    for (unsigned i = 0; i < k; ++i) out[i] = static_cast<u32>(prod[i] % p);
    return out;
}

Elem Field::add(Elem a, Elem b) const {
    const u64 p = pp_.p;
    if (pp_.k == 1) return (a + b) % p;
    u64 out = 0, mult = 1;
    for (unsigned i = 0; i < pp_.k; ++i) {
        out += (a % p + b % p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
    const u64 p = pp_.p;
    if (pp_.k == 1) return (p - a) % p;
    u64 out = 0, mult = 1;
    for (unsigned i = 0; i < pp_.k; ++i) {
        out += (p - a % p) % p * mult;
        a /= p;
        mult *= p;
    }
    return out;
}

Elem Field::mul(Elem a, Elem b) const {
    if (pp_.k == 1) return a * b % pp_.p;
    if (a == 0 || b == 0) return 0;
    return from_coeffs(mul_digits(coeffs_of(a), coeffs_of(b)));
}

Elem Field::pow(Elem a, u64 e) const {
    Elem out = 1;
    while (e > 0) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inv: zero element");
    return pow(a, pp_.q - 2);
}

Elem Field::from_int(long long v) const {
    const long long p = static_cast<long long>(pp_.p);
    return static_cast<Elem>(((v % p) + p) % p);
}

u64 Field::element_order(Elem h) const {
    if (h == 0) throw std::invalid_argument("element_order: zero element");
    return qm1() / gcd_u64(qm1(), dlog(h));
}

bool Field::is_n_primitive(Elem h, u64 n) const {
    if (n == 0 || qm1() % n != 0) throw std::invalid_argument("is_n_primitive: n must divide q-1");
    if (h == 0) return false;
    return element_order(h) == qm1() / n;
}

Elem Field::eval_poly(std::span<const Elem> coeffs, Elem x) const {
    Elem v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = add(mul(v, x), coeffs[i]);
    return v;
}

} // namespace rnfree::gf
