#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "partpoly/rational.hpp"

namespace partpoly {

/// Dense univariate polynomial over Rational. coeffs[i] is the coefficient
/// of x^i; the highest stored coefficient is nonzero (the zero polynomial
/// stores nothing, degree() == -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { strip(); }

    static Poly constant(const Rational& c);
    /// c * x^k
    static Poly monomial(unsigned k, const Rational& c = Rational(1));
    static Poly from_int_coeffs(std::initializer_list<long> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the stored range).
    const Rational& coeff(size_t i) const;
    const Rational& leading() const;

    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    /// q with q(t) = p(t + c), by iterated synthetic (Horner) division.
    Poly shift(const Rational& c) const;

    /// Positive content (gcd of numerators / lcm of denominators); 0 for the
    /// zero polynomial. primitive_part() = p / content(), which has coprime
    /// integer coefficients and the sign of p.
    Rational content() const;
    Poly primitive_part() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder with deg(rem) < deg(divisor). Throws on zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    /// divmod quotient; throws if the remainder is nonzero.
    static Poly div_exact(const Poly& num, const Poly& den);

    /// Human-readable form, highest power first, e.g. "1/12*x^4 + 11/12*x^2".
    std::string to_string(const std::string& var = "x") const;

private:
    void strip();
    std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (monic gcd; gcd(0,0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'): same distinct roots, all simple.
Poly squarefree_part(const Poly& p);

}  // namespace partpoly
