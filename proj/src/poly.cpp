#include "partpoly/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "zprs.hpp"

namespace partpoly {

void Poly::strip() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (sign(c) != 0) p.coeffs_.push_back(c);
    return p;
}

Poly Poly::monomial(unsigned k, const Rational& c) {
    Poly p;
    if (sign(c) != 0) {
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = c;
    }
    return p;
}

Poly Poly::from_int_coeffs(std::initializer_list<long> coeffs) {
    std::vector<Rational> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.emplace_back(c);
    return Poly(std::move(cs));
}

const Rational& Poly::coeff(size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading(): zero polynomial");
    return coeffs_.back();
}

int Poly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (sign(coeffs_[i]) != 0) return static_cast<int>(i);
    return -1;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(d));
}

Poly Poly::shift(const Rational& c) const {
    // Repeated synthetic division by (t - c) accumulates the Taylor
    // coefficients of p at c in place.
    std::vector<Rational> a = coeffs_;
    const size_t n = a.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
    return Poly(std::move(a));
}

Rational Poly::content() const {
    if (coeffs_.empty()) return Rational(0);
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& c : coeffs_) {
        if (sign(c) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

Poly Poly::primitive_part() const {
    if (coeffs_.empty()) return Poly();
    return *this / content();
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    strip();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sign(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    if (sign(c) == 0) throw std::invalid_argument("Poly: division by zero constant");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sign(a.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("Poly::divmod: zero divisor");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Rational> rem = num.coeffs_;
    std::vector<Rational> quo(num.coeffs_.size() - den.coeffs_.size() + 1, Rational(0));
    const size_t dd = den.coeffs_.size() - 1;
    for (size_t i = rem.size(); i-- > dd;) {
        if (sign(rem[i]) == 0) continue;
        Rational q = rem[i] / den.coeffs_[dd];
        quo[i - dd] = q;
        for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::invalid_argument("Poly::div_exact: division is not exact");
    return q;
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sign(c) == 0) continue;
        Rational abs_c = sign(c) < 0 ? Rational(-c) : c;
        if (first) {
            if (sign(c) < 0) out << "-";
            first = false;
        } else {
            out << (sign(c) < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == Rational(1);
        if (i == 0) {
            out << rational_to_string(abs_c);
        } else {
            if (!unit) out << rational_to_string(abs_c) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b / b.leading();
    if (b.is_zero()) return a / a.leading();
    // Primitive pseudo-remainder sequence over the integers; stripping the
    // content each step keeps coefficient growth subresultant-bounded.
    detail::ZPoly r0 = detail::to_primitive_z(a);
    detail::ZPoly r1 = detail::to_primitive_z(b);
    if (detail::zdeg(r0) < detail::zdeg(r1)) std::swap(r0, r1);
    while (!r1.empty()) {
        detail::ZPoly r = detail::pseudo_rem(r0, r1);
        detail::strip_content(r);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    Poly g = detail::from_z(r0);
    return g / g.leading();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) return p;
    Poly g = poly_gcd(p, p.derivative());
    return Poly::div_exact(p, g);
}

}  // namespace partpoly
