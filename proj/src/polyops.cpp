#include "rnfree/polyops.hpp"

#include <stdexcept>

namespace rnfree::gf {

ElemPoly poly_trimmed(ElemPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int poly_degree(const ElemPoly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

ElemPoly poly_mul(const Field& f, const ElemPoly& a, const ElemPoly& b) {
    const ElemPoly ta = poly_trimmed(a);
    const ElemPoly tb = poly_trimmed(b);
    if (ta.empty() || tb.empty()) return {};
    ElemPoly out(ta.size() + tb.size() - 1, 0);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i] == 0) continue;
        for (std::size_t j = 0; j < tb.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(ta[i], tb[j]));
    }
    return poly_trimmed(out);
}

std::pair<ElemPoly, ElemPoly> poly_divmod(const Field& f, ElemPoly a, const ElemPoly& b) {
    a = poly_trimmed(std::move(a));
    const ElemPoly d = poly_trimmed(b);
    if (d.empty()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    const int db = poly_degree(d);
    const Elem lead_inv = f.inv(d.back());
    ElemPoly quot;
    while (poly_degree(a) >= db) {
        const int da = poly_degree(a);
        const Elem c = f.mul(a.back(), lead_inv);
        const std::size_t shift = static_cast<std::size_t>(da - db);
        if (quot.size() < shift + 1) quot.resize(shift + 1, 0);
        quot[shift] = c;
        for (std::size_t j = 0; j < d.size(); ++j)
            a[shift + j] = f.sub(a[shift + j], f.mul(c, d[j]));
        a = poly_trimmed(std::move(a));
    }
    return {poly_trimmed(std::move(quot)), std::move(a)};
}

ElemPoly poly_gcd(const Field& f, ElemPoly a, ElemPoly b) {
    a = poly_trimmed(std::move(a));
    b = poly_trimmed(std::move(b));
    while (!b.empty()) {
        ElemPoly r = poly_divmod(f, std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, std::move(a));
}

ElemPoly poly_derivative(const Field& f, const ElemPoly& a) {
    ElemPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) {
        Elem c = 0;
        const Elem scale = f.from_int(static_cast<long long>(i % f.p()));
        c = f.mul(a[i], scale);
        out.push_back(c);
    }
    return poly_trimmed(out);
}

ElemPoly poly_monic(const Field& f, ElemPoly a) {
    a = poly_trimmed(std::move(a));
    if (a.empty() || a.back() == 1) return a;
    const Elem s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
    return a;
}

bool poly_is_squarefree(const Field& f, const ElemPoly& a) {
    if (poly_degree(a) < 1) throw std::invalid_argument("poly_is_squarefree: degree must be >= 1");
    return poly_degree(poly_gcd(f, a, poly_derivative(f, a))) == 0;
}

bool poly_is_constant_multiple(const Field& f, const ElemPoly& a, const ElemPoly& b) {
    const ElemPoly ta = poly_trimmed(a);
    const ElemPoly tb = poly_trimmed(b);
    if (ta.size() != tb.size()) return false;
    if (ta.empty()) return true;
    // a_i * b_j == a_j * b_i for all i, j
    for (std::size_t i = 0; i < ta.size(); ++i)
        for (std::size_t j = i + 1; j < ta.size(); ++j)
            if (f.mul(ta[i], tb[j]) != f.mul(ta[j], tb[i])) return false;
    return true;
}

} // namespace rnfree::gf
