#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partpoly/inequality.hpp"

namespace partpoly {

namespace {

void set_q(mpfr_t out, const Rational& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

/// π·(x/24)^(x/2+1)·(AB)^(−x/4−5/4)·e^(π√(2x/3)(√A+√B))·(√A−√B) at the
/// precision of `out`. A and B must be positive.
void eval_term(mpfr_t out, const Rational& x, const Rational& A, const Rational& B) {
    mpfr_prec_t prec = mpfr_get_prec(out);
    mpfr_t t, u, sa, sb;
    mpfr_inits2(prec, t, u, sa, sb, static_cast<mpfr_ptr>(nullptr));

    set_q(t, A);
    mpfr_sqrt(sa, t, MPFR_RNDN);
    set_q(t, B);
    mpfr_sqrt(sb, t, MPFR_RNDN);

    mpfr_const_pi(out, MPFR_RNDN);

    set_q(t, x / 24);
    set_q(u, x / 2 + 1);
    mpfr_pow(t, t, u, MPFR_RNDN);
    mpfr_mul(out, out, t, MPFR_RNDN);

    set_q(t, A * B);
    set_q(u, -(x + 5) / 4);
    mpfr_pow(t, t, u, MPFR_RNDN);
    mpfr_mul(out, out, t, MPFR_RNDN);

    set_q(t, x * 2 / 3);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_const_pi(u, MPFR_RNDN);
    mpfr_mul(t, t, u, MPFR_RNDN);
    mpfr_add(u, sa, sb, MPFR_RNDN);
    mpfr_mul(t, t, u, MPFR_RNDN);
    mpfr_exp(t, t, MPFR_RNDN);
    mpfr_mul(out, out, t, MPFR_RNDN);

    mpfr_sub(u, sa, sb, MPFR_RNDN);
    mpfr_mul(out, out, u, MPFR_RNDN);

    mpfr_clears(t, u, sa, sb, static_cast<mpfr_ptr>(nullptr));
}

std::string decimal(mpfr_t v, int sig_digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", sig_digits - 1, v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

MainTermResult main_term(int a, int b, const Rational& x, int precision_bits) {
    if (b < 0 || a <= b) throw std::invalid_argument("main_term: need 0 <= b < a");
    if (precision_bits < 16) throw std::invalid_argument("main_term: precision_bits too small");
    if (sign(x) <= 0) throw std::invalid_argument("main_term: need x > 0");

    const Rational A = Rational(a - 1) - x / 24;
    const Rational B = Rational(b) - x / 24;
    if (sign(B) <= 0) throw std::domain_error("main_term: need b > x/24");

    MainTermResult res;

    // hypothesis B >= max{2x^11, 100/(x−24)}, decided exactly (the second
    // branch only binds for x > 24; at the pole x = 24 it is undecidable)
    bool hyp = B >= 2 * pow_rational(x, 11);
    if (x > 24) hyp = hyp && B >= Rational(100) / (x - 24);
    if (x == 24) hyp = false;
    res.valid = hyp;

    ValueSequence seq = eval_sequence(x, a);
    const std::vector<Rational>& v = seq.values;
    const Rational delta_val = v[a - 1] * v[b + 1] - v[a] * v[b];

    const mpfr_prec_t lo_prec = precision_bits;
    const mpfr_prec_t hi_prec = 2 * static_cast<mpfr_prec_t>(precision_bits);
    const int digits = std::max(17, static_cast<int>(precision_bits * 30103L / 100000));

    mpfr_t m_lo, m_hi, d, ratio, diff, tol;
    mpfr_init2(m_lo, lo_prec);
    mpfr_inits2(hi_prec, m_hi, d, ratio, diff, tol, static_cast<mpfr_ptr>(nullptr));

    eval_term(m_lo, x, A, B);
    eval_term(m_hi, x, A, B);
    res.main_term = decimal(m_hi, digits);

    // |m_lo − m_hi| <= |m_hi|·2^(−precision_bits/2), else the evaluation is
    // not trusted at this precision
    mpfr_sub(diff, m_lo, m_hi, MPFR_RNDN);
    mpfr_abs(diff, diff, MPFR_RNDN);
    mpfr_abs(tol, m_hi, MPFR_RNDN);
    mpfr_mul_2si(tol, tol, -(precision_bits / 2), MPFR_RNDN);
    res.precision_ok = mpfr_cmp(diff, tol) <= 0;

    set_q(d, delta_val);
    res.delta_exact = decimal(d, digits);

    if (mpfr_zero_p(m_hi)) {
        res.ratio.clear();
        res.ratio_in_window = sign(delta_val) == 0;
    } else {
        mpfr_div(ratio, d, m_hi, MPFR_RNDN);
        res.ratio = decimal(ratio, digits);
        res.ratio_in_window = mpfr_cmp_q(ratio, make_rational(1, 3).get_mpq_t()) >= 0 &&
                              mpfr_cmp_q(ratio, make_rational(5, 3).get_mpq_t()) <= 0;
    }

    mpfr_clear(m_lo);
    mpfr_clears(m_hi, d, ratio, diff, tol, static_cast<mpfr_ptr>(nullptr));
    return res;
}

}  // namespace partpoly
