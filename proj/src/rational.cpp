#include "partpoly/rational.hpp"

#include <stdexcept>
#include <vector>

namespace partpoly {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(std::string_view s) {
    auto bad = [&]() -> Rational {
        throw std::invalid_argument("rational_from_string: cannot parse '" + std::string(s) + "'");
    };
    if (s.empty()) return bad();

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (num.empty() || den.empty()) return bad();
        try {
            // explicit base 10: the default base-0 constructor would read
            // leading zeros as octal
            return make_rational(Integer(num, 10), Integer(den, 10));
        } catch (const std::invalid_argument&) {
            return bad();
        }
    }

    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        try {
            return Rational(Integer(std::string(s), 10));
        } catch (const std::invalid_argument&) {
            return bad();
        }
    }

    // Exact decimal: sign? intpart "." fracpart
    std::string intpart(s.substr(0, dot)), fracpart(s.substr(dot + 1));
    bool neg = false;
    if (!intpart.empty() && (intpart[0] == '-' || intpart[0] == '+')) {
        neg = intpart[0] == '-';
        intpart.erase(0, 1);
    }
    if (intpart.empty() && fracpart.empty()) return bad();
    for (char c : intpart)
        if (c < '0' || c > '9') return bad();
    for (char c : fracpart)
        if (c < '0' || c > '9') return bad();

    Integer num(intpart.empty() ? std::string("0") : intpart, 10);
    Integer scale(1);
    for (size_t i = 0; i < fracpart.size(); ++i) scale *= 10;
    num *= scale;
    if (!fracpart.empty()) num += Integer(fracpart, 10);
    if (neg) num = -num;
    return make_rational(num, scale);
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
    bool neg = sgn(r) < 0;
    Rational a = abs(r);

    Integer scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;

    // a * scale = q + rem/den with 0 <= rem < den; round half to even.
    Integer num = a.get_num() * scale;
    const Integer& den = a.get_den();
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    std::string s = q.get_str();
    if (digits == 0) return (neg && q != 0) ? "-" + s : s;
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg && q != 0) s.insert(0, "-");
    return s;
}

int sign(const Rational& r) { return sgn(r); }
int sign(const Integer& z) { return sgn(z); }

Rational pow_rational(const Rational& r, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den().get_mpz_t(), r.get_den().get_mpz_t(), e);
    out.canonicalize();
    return out;
}

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_in_interval: lo > hi");
    if (lo == hi) return lo;
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplest_in_interval(-hi, -lo);

    // 0 < lo < hi: continued-fraction descent. Each step either finds an
    // integer in [a,b] (smallest is ceil(a)) or strips the common floor and
    // recurses on reciprocals (which swaps the endpoints).
    std::vector<Integer> terms;
    Rational a = lo, b = hi;
    while (true) {
        Integer ca, fb;
        mpz_cdiv_q(ca.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
        mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        if (ca <= fb) {
            terms.push_back(ca);
            break;
        }
        Integer f = ca - 1;  // common floor; a is not an integer here
        terms.push_back(f);
        Rational na = Rational(1) / (b - Rational(f));
        Rational nb = Rational(1) / (a - Rational(f));
        a = na;
        b = nb;
    }
    Rational r(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
        r = Rational(*it) + Rational(1) / r;
    return r;
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace partpoly
