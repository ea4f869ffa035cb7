#include "doctest.h"
#include "partpoly/poly.hpp"

using namespace partpoly;

TEST_CASE("construction strips leading zeros") {
    Poly p({Rational(1), Rational(2), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(Poly{}.is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly::constant(Rational(0)).is_zero());
    CHECK(Poly::monomial(3).degree() == 3);
    CHECK(Poly::monomial(3).leading() == Rational(1));
}

TEST_CASE("coeff beyond the stored range is zero") {
    Poly p = Poly::from_int_coeffs({4, 0, 1});  // x^2 + 4
    CHECK(p.coeff(0) == Rational(4));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(1));
    CHECK(p.coeff(9) == Rational(0));
    CHECK(p.valuation() == 0);
    CHECK(Poly::from_int_coeffs({0, 0, 3, 1}).valuation() == 2);
    CHECK(Poly{}.valuation() == -1);
}

TEST_CASE("ring operations") {
    Poly x1 = Poly::from_int_coeffs({1, 1});   // x + 1
    Poly sq = Poly::from_int_coeffs({1, 2, 1});  // (x+1)^2
    CHECK(x1 * x1 == sq);
    CHECK(x1 + x1 == Poly::from_int_coeffs({2, 2}));
    CHECK(x1 - x1 == Poly{});
    CHECK(-x1 == Poly::from_int_coeffs({-1, -1}));
    CHECK(x1 * Rational(3) == Poly::from_int_coeffs({3, 3}));
    CHECK(sq / Rational(2) == sq * make_rational(1, 2));
    CHECK((Poly{} * x1).is_zero());
}

TEST_CASE("evaluation uses exact rationals") {
    Poly p = Poly::from_int_coeffs({-2, 0, 1});  // x^2 - 2
    CHECK(p.eval(Rational(3)) == Rational(7));
    CHECK(p.eval(make_rational(1, 2)) == make_rational(-7, 4));
    CHECK(Poly{}.eval(Rational(5)) == Rational(0));
}

TEST_CASE("derivative and shift") {
    Poly p = Poly::from_int_coeffs({5, 0, 0, 1});  // x^3 + 5
    CHECK(p.derivative() == Poly::from_int_coeffs({0, 0, 3}));
    CHECK(Poly::constant(Rational(7)).derivative().is_zero());

    Poly x2 = Poly::monomial(2);
    CHECK(x2.shift(Rational(1)) == Poly::from_int_coeffs({1, 2, 1}));  // (x+1)^2
    CHECK(x2.shift(Rational(-1)) == Poly::from_int_coeffs({1, -2, 1}));
    // shift is composition: value matches pointwise
    Poly q = Poly::from_int_coeffs({3, -1, 4, 1});
    Rational c = make_rational(5, 3);
    for (long t = -3; t <= 3; ++t)
        CHECK(q.shift(c).eval(Rational(t)) == q.eval(Rational(t) + c));
}

TEST_CASE("content and primitive part") {
    Poly p = Poly::from_int_coeffs({4, 6}) * make_rational(1, 9);  // (6x+4)/9
    Rational c = p.content();
    CHECK(c == make_rational(2, 9));
    CHECK(p.primitive_part() == Poly::from_int_coeffs({2, 3}));
    CHECK(p.primitive_part() * c == p);
    // sign follows the polynomial, content stays positive
    Poly m = Poly::from_int_coeffs({-4, -6});
    CHECK(m.content() == Rational(2));
    CHECK(m.primitive_part() == Poly::from_int_coeffs({-2, -3}));
    CHECK(Poly{}.content() == Rational(0));
}

TEST_CASE("divmod and exact division") {
    Poly num = Poly::from_int_coeffs({-1, 0, 1});  // x^2 - 1
    Poly den = Poly::from_int_coeffs({-1, 1});     // x - 1
    auto [q, r] = Poly::divmod(num, den);
    CHECK(q == Poly::from_int_coeffs({1, 1}));
    CHECK(r.is_zero());
    CHECK(Poly::div_exact(num, den) == q);

    auto [q2, r2] = Poly::divmod(Poly::from_int_coeffs({1, 0, 1}), den);
    CHECK(q2 == Poly::from_int_coeffs({1, 1}));
    CHECK(r2 == Poly::constant(Rational(2)));
    CHECK_THROWS_AS(Poly::div_exact(Poly::from_int_coeffs({1, 0, 1}), den), std::invalid_argument);
    CHECK_THROWS_AS(Poly::divmod(num, Poly{}), std::invalid_argument);
}

TEST_CASE("gcd is monic and squarefree_part drops multiplicity") {
    Poly a = Poly::from_int_coeffs({-1, 0, 1});  // (x-1)(x+1)
    Poly b = Poly::from_int_coeffs({-1, 1});     // x - 1
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(a * Rational(6), b * make_rational(-1, 7)) == b);
    CHECK(poly_gcd(Poly{}, Poly{}).is_zero());
    CHECK(poly_gcd(a, Poly{}) == a);  // already monic

    Poly cube = b * b * b * Poly::from_int_coeffs({2, 1});  // (x-1)^3 (x+2)
    CHECK(squarefree_part(cube) == b * Poly::from_int_coeffs({2, 1}));
    CHECK(squarefree_part(b) == b);
}

TEST_CASE("to_string renders highest power first") {
    Poly p = Poly::monomial(4, make_rational(1, 12)) + Poly::monomial(2, make_rational(11, 12));
    CHECK(p.to_string() == "1/12*x^4 + 11/12*x^2");
    CHECK(Poly{}.to_string() == "0");
    CHECK(Poly::constant(make_rational(-3, 2)).to_string() == "-3/2");
}
