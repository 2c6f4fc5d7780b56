#pragma once

#include <utility>
#include <vector>

#include "rnfree/gf.hpp"

namespace rnfree::gf {

// Dense polynomials over F_q with canonical-index coefficients; coefficient i
// multiplies x^i. The zero polynomial is the empty vector.
using ElemPoly = std::vector<Elem>;

ElemPoly poly_trimmed(ElemPoly a);
int poly_degree(const ElemPoly& a); // -1 for zero

ElemPoly poly_mul(const Field& f, const ElemPoly& a, const ElemPoly& b);
// division with remainder by a nonzero divisor; returns {quotient, remainder}
std::pair<ElemPoly, ElemPoly> poly_divmod(const Field& f, ElemPoly a, const ElemPoly& b);
// monic gcd
ElemPoly poly_gcd(const Field& f, ElemPoly a, ElemPoly b);
ElemPoly poly_derivative(const Field& f, const ElemPoly& a);
ElemPoly poly_monic(const Field& f, ElemPoly a);

// gcd(a, a') is constant; requires deg a >= 1
bool poly_is_squarefree(const Field& f, const ElemPoly& a);
// a == c * b for some nonzero constant c (checked by cross-multiplication)
bool poly_is_constant_multiple(const Field& f, const ElemPoly& a, const ElemPoly& b);

} // namespace rnfree::gf
