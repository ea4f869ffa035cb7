#pragma once

// Internal helpers for polynomial remainder sequences over the integers.
// Rational polynomials are reduced to primitive integer coefficient vectors
// once, then all division/evaluation work stays in mpz, where content
// stripping keeps coefficient growth subresultant-bounded.

#include <vector>

#include "partpoly/poly.hpp"
#include "partpoly/rational.hpp"

namespace partpoly::detail {

// Dense integer polynomial, index = power, trailing coefficient nonzero;
// empty vector = zero polynomial.
using ZPoly = std::vector<Integer>;

inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Primitive integer form of p (divide out the rational content; sign kept).
ZPoly to_primitive_z(const Poly& p);

Poly from_z(const ZPoly& p);

ZPoly z_derivative(const ZPoly& p);

/// Divide by the (positive) integer content in place; sign preserved.
void strip_content(ZPoly& p);

/// Pseudo-remainder: lb^(deg a - deg b + 1) · (a mod b), all integer.
/// Requires deg a >= deg b >= 0.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

/// Sign of p(u/v) for v > 0, computed exactly via the homogenized Horner
/// scheme (no rational arithmetic).
int sign_at(const ZPoly& p, const Integer& u, const Integer& v);
int sign_at(const ZPoly& p, const Rational& x);

}  // namespace partpoly::detail
