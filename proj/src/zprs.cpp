#include "zprs.hpp"

#include <stdexcept>

namespace partpoly::detail {

ZPoly to_primitive_z(const Poly& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    const Poly prim = p.primitive_part();
    out.reserve(prim.coeffs().size());
    for (const auto& c : prim.coeffs()) {
        // primitive_part clears denominators by construction
        if (c.get_den() != 1) throw std::logic_error("to_primitive_z: non-integer coefficient after primitive_part");
        out.push_back(c.get_num());
    }
    return out;
}

Poly from_z(const ZPoly& p) {
    std::vector<Rational> cs;
    cs.reserve(p.size());
    for (const auto& c : p) cs.emplace_back(c);
    return Poly(std::move(cs));
}

ZPoly z_derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * (long)i;
    return d;
}

void strip_content(ZPoly& p) {
    if (p.empty()) return;
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::invalid_argument("pseudo_rem: zero divisor");
    if (zdeg(a) < zdeg(b)) throw std::invalid_argument("pseudo_rem: deg a < deg b");
    const Integer& lb = b.back();
    const int db = zdeg(b);
    ZPoly r = a;
    // Eliminate the top coefficient with r <- lb·r − top·x^(i−db)·b; exactly
    // deg a − db + 1 passes, so the result is lb^(deg a − db + 1)·(a mod b).
    for (int i = zdeg(a); i >= db; --i) {
        const Integer top = r[i];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= top * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

int sign_at(const ZPoly& p, const Integer& u, const Integer& v) {
    if (p.empty()) return 0;
    // p(u/v)·v^deg = Σ c_i·u^i·v^(deg−i), accumulated Horner-style.
    Integer acc = p.back();
    Integer vpow(1);
    for (size_t i = p.size() - 1; i-- > 0;) {
        vpow *= v;
        acc *= u;
        acc += p[i] * vpow;
    }
    return sign(acc);
}

int sign_at(const ZPoly& p, const Rational& x) { return sign_at(p, x.get_num(), x.get_den()); }

}  // namespace partpoly::detail
