#include "partpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zprs.hpp"

namespace partpoly {

using detail::ZPoly;

namespace {

// Rational upper bound on r^(1/k): round the integer k-th roots outward.
Rational kth_root_upper(const Rational& r, int k) {
    Integer nu, de;
    mpz_root(nu.get_mpz_t(), r.get_num().get_mpz_t(), k);
    nu += 1;
    mpz_root(de.get_mpz_t(), r.get_den().get_mpz_t(), k);
    return make_rational(nu, de);
}

// Fujiwara-style bound: |root| <= 2·max_k |c_{d−k}/c_d|^(1/k), relaxed
// upward to rationals.
Rational fujiwara_bound(const ZPoly& f) {
    const int d = detail::zdeg(f);
    Rational lead(f.back());
    if (sign(lead) < 0) lead = -lead;
    Rational best(0);
    for (int k = 1; k <= d; ++k) {
        const Integer& c = f[d - k];
        if (c == 0) continue;
        Rational ratio(c);
        if (sign(ratio) < 0) ratio = -ratio;
        ratio /= lead;
        Rational cand = kth_root_upper(ratio, k);
        if (cand > best) best = cand;
    }
    return 2 * best;
}

Rational ceil_rational(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rational(q);
}

}  // namespace

Rational cauchy_bound(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
    Rational lead = p.leading();
    if (sign(lead) < 0) lead = -lead;
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (sign(c) < 0) c = -c;
        if (c > best) best = c;
    }
    return 1 + best / lead;
}

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    sf_ = squarefree_part(p);
    ZPoly s0 = detail::to_primitive_z(sf_);

    if (detail::zdeg(s0) < 1) {
        bound_ = Rational(1);
        seq_.push_back(std::move(s0));
        return;
    }
    // Every root lies strictly inside (−bound_, bound_); the integer ceiling
    // keeps later bisection midpoints dyadic.
    Rational b = cauchy_bound(sf_);
    Rational fuj = fujiwara_bound(s0);
    if (fuj < b) b = fuj;
    bound_ = ceil_rational(b) + 1;

    ZPoly s1 = detail::z_derivative(s0);
    detail::strip_content(s1);
    seq_.push_back(std::move(s0));
    seq_.push_back(std::move(s1));
    while (detail::zdeg(seq_.back()) > 0) {
        const ZPoly& prev = seq_[seq_.size() - 2];
        const ZPoly& cur = seq_.back();
        ZPoly r = detail::pseudo_rem(prev, cur);
        if (r.empty()) break;  // squarefree input: only at the constant end
        // pseudo_rem scales the true remainder by lc^(δ+1); when that factor
        // is positive the Sturm rule "next = −remainder" means negating r,
        // otherwise r already carries the wanted sign.
        const int delta = detail::zdeg(prev) - detail::zdeg(cur);
        const bool positive_scale = sign(cur.back()) > 0 || (delta + 1) % 2 == 0;
        if (positive_scale)
            for (auto& c : r) c = -c;
        detail::strip_content(r);
        seq_.push_back(std::move(r));
    }
}

int SturmChain::changes_at(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& f : seq_) {
        const int s = detail::sign_at(f, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::changes_at_pos_inf() const {
    int changes = 0;
    int last = 0;
    for (const auto& f : seq_) {
        const int s = sign(f.back());
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::changes_at_neg_inf() const {
    int changes = 0;
    int last = 0;
    for (const auto& f : seq_) {
        int s = sign(f.back());
        if (detail::zdeg(f) % 2 == 1) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::invalid_argument("SturmChain::count: lo > hi");
    if (lo == hi) return 0;
    return changes_at(lo) - changes_at(hi);
}

int SturmChain::count_above(const Rational& lo) const { return changes_at(lo) - changes_at_pos_inf(); }

int SturmChain::count_all() const { return changes_at_neg_inf() - changes_at_pos_inf(); }

int SturmChain::sign_sf(const Rational& x) const { return detail::sign_at(seq_.front(), x); }

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) { return SturmChain(p).count(lo, hi); }

int sturm_count_above(const Poly& p, const Rational& lo) { return SturmChain(p).count_above(lo); }

namespace {

// Rewrites an isolating cell (lo, hi] so that a root sitting exactly on hi
// becomes a point interval and both endpoints of a non-point interval are
// non-roots (then the single interior root forces a sign change).
Interval normalize_cell(const SturmChain& ch, Rational lo, Rational hi) {
    if (ch.sign_sf(hi) == 0) return {hi, hi};
    while (ch.sign_sf(lo) == 0) {
        Rational m = (lo + hi) / 2;
        if (ch.sign_sf(m) == 0) return {m, m};
        if (ch.count(m, hi) == 1)
            lo = std::move(m);
        else
            hi = std::move(m);
    }
    return {lo, hi};
}

}  // namespace

std::vector<Interval> isolate_real_roots_in(const SturmChain& ch, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("isolate_real_roots_in: lo > hi");
    std::vector<Interval> out;
    if (lo == hi) return out;

    struct Cell {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Cell> stack;
    stack.push_back({lo, hi, ch.changes_at(lo), ch.changes_at(hi)});
    while (!stack.empty()) {
        Cell c = std::move(stack.back());
        stack.pop_back();
        const int n = c.vlo - c.vhi;
        if (n <= 0) continue;
        if (n == 1) {
            out.push_back(normalize_cell(ch, c.lo, c.hi));
            continue;
        }
        Rational m = (c.lo + c.hi) / 2;
        const int vm = ch.changes_at(m);
        stack.push_back({c.lo, m, c.vlo, vm});
        stack.push_back({std::move(m), c.hi, vm, c.vhi});
    }

    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    // Neighboring brackets may share a (non-root) endpoint; pull the right
    // one's lo inward so the intervals are disjoint as sets.
    for (size_t i = 1; i < out.size(); ++i) {
        while (!out[i].is_point() && out[i].lo == out[i - 1].hi) {
            Rational m = (out[i].lo + out[i].hi) / 2;
            if (ch.sign_sf(m) == 0) {
                out[i] = {m, m};
                break;
            }
            if (ch.count(m, out[i].hi) == 1)
                out[i].lo = std::move(m);
            else
                out[i].hi = std::move(m);
        }
    }
    return out;
}

std::vector<Interval> isolate_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    SturmChain ch(p);
    return isolate_real_roots_in(ch, -ch.bound(), ch.bound());
}

namespace {

// Bisect a sign-change bracket down to the requested width; an exactly
// rational root collapses to a point on the way or via the final snap.
template <typename SignAt>
Interval bisect_bracket(const SignAt& sgn, Rational lo, Rational hi, int slo, int precision_bits) {
    const Rational target = pow_rational(make_rational(1, 2), precision_bits);
    while (hi - lo > target) {
        Rational m = (lo + hi) / 2;
        const int sm = sgn(m);
        if (sm == 0) return {m, m};
        if (sm == slo)
            lo = std::move(m);
        else
            hi = std::move(m);
    }
    Rational r = simplest_in_interval(lo, hi);
    if (sgn(r) == 0) return {r, r};
    return {lo, hi};
}

}  // namespace

Interval refine(const Poly& p, const Interval& iv, int precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("refine: zero polynomial");
    if (iv.lo > iv.hi) throw std::invalid_argument("refine: lo > hi");
    const Poly sf = squarefree_part(p);
    const ZPoly f = detail::to_primitive_z(sf);
    const auto sgn = [&f](const Rational& x) { return detail::sign_at(f, x); };

    if (iv.is_point()) {
        if (sgn(iv.lo) == 0) return iv;
        throw std::invalid_argument("refine: point interval is not a root");
    }
    const int slo = sgn(iv.lo);
    if (slo == 0) return {iv.lo, iv.lo};
    if (sgn(iv.hi) == 0) return {iv.hi, iv.hi};
    if (slo == sgn(iv.hi)) throw std::invalid_argument("refine: no sign change across interval");
    return bisect_bracket(sgn, iv.lo, iv.hi, slo, precision_bits);
}

std::optional<Interval> largest_real_root(const Poly& p, int precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("largest_real_root: zero polynomial");
    if (p.degree() == 0) return std::nullopt;
    SturmChain ch(p);
    Rational lo = -ch.bound(), hi = ch.bound();
    int vlo = ch.changes_at(lo), vhi = ch.changes_at(hi);
    if (vlo - vhi == 0) return std::nullopt;
    // Shave off everything left of the maximal root, then refine its cell.
    while (vlo - vhi > 1) {
        Rational m = (lo + hi) / 2;
        const int vm = ch.changes_at(m);
        if (vm - vhi >= 1) {
            lo = std::move(m);
            vlo = vm;
        } else {
            hi = std::move(m);
            vhi = vm;
        }
    }
    Interval iv = normalize_cell(ch, std::move(lo), std::move(hi));
    if (iv.is_point()) return iv;
    const auto sgn = [&ch](const Rational& x) { return ch.sign_sf(x); };
    return bisect_bracket(sgn, iv.lo, iv.hi, ch.sign_sf(iv.lo), precision_bits);
}

std::vector<std::pair<int, Poly>> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    std::vector<std::pair<int, Poly>> out;
    if (p.degree() == 0) return out;
    Poly g = poly_gcd(p, p.derivative());
    Poly w = Poly::div_exact(p, g);
    int mult = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly f = Poly::div_exact(w, y);
        if (f.degree() > 0) out.emplace_back(mult, std::move(f));
        w = std::move(y);
        g = Poly::div_exact(g, w);
        ++mult;
    }
    return out;
}

namespace {

struct Cplx {
    mpf_class re, im;
};

mpf_class to_mpf(const Rational& q, int prec) {
    mpf_class out(0, prec);
    mpf_set_q(out.get_mpf_t(), q.get_mpq_t());
    return out;
}

// log2|c| to within a couple of bits; steers initial guesses only.
double approx_log2(const Rational& c) {
    return double(mpz_sizeinbase(c.get_num().get_mpz_t(), 2)) - double(mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
}

double initial_radius(const Poly& f) {
    const int d = f.degree();
    const double lead = approx_log2(f.leading());
    double best = -4000.0;
    for (int k = 1; k <= d; ++k) {
        const Rational& c = f.coeff(d - k);
        if (sign(c) == 0) continue;
        best = std::max(best, (approx_log2(c) - lead) / k);
    }
    if (best < -2000.0) return 1.0;
    return 2.0 * std::pow(2.0, std::min(best, 900.0));
}

// Simultaneous Aberth–Ehrlich iteration on real coefficients c[0..d].
std::vector<Cplx> aberth(const std::vector<mpf_class>& c, int prec) {
    const int d = (int)c.size() - 1;
    std::vector<Cplx> z;
    z.reserve(d);
    {
        std::vector<Rational> rc(c.size());  // only for the radius heuristic
        for (size_t i = 0; i < c.size(); ++i) {
            mpq_class q;
            mpq_set_f(q.get_mpq_t(), c[i].get_mpf_t());
            rc[i] = q;
        }
        const double radius = initial_radius(Poly(std::move(rc)));
        for (int k = 0; k < d; ++k) {
            const double theta = 2.0 * M_PI * k / d + 0.37;
            z.push_back({mpf_class(radius * std::cos(theta), prec), mpf_class(radius * std::sin(theta), prec)});
        }
    }

    mpf_class eps(0, prec), tiny(0, prec);
    mpf_set_ui(eps.get_mpf_t(), 1);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec - 2);
    mpf_set_ui(tiny.get_mpf_t(), 1);
    mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), prec / 3);

    mpf_class pr(0, prec), pi(0, prec), dpr(0, prec), dpi(0, prec);
    mpf_class t1(0, prec), t2(0, prec), den(0, prec);
    mpf_class nr(0, prec), ni(0, prec), sr(0, prec), si(0, prec);
    mpf_class dr(0, prec), di(0, prec), dd(0, prec);
    mpf_class tr(0, prec), ti(0, prec), td(0, prec), wr(0, prec), wi(0, prec);

    const int max_iters = 80 + 3 * prec;
    for (int iter = 0; iter < max_iters; ++iter) {
        bool moved = false;
        for (int k = 0; k < d; ++k) {
            // p and p' at z_k by a joint Horner pass
            pr = c[d];
            pi = 0;
            dpr = 0;
            dpi = 0;
            for (int i = d - 1; i >= 0; --i) {
                t1 = dpr * z[k].re - dpi * z[k].im + pr;
                t2 = dpr * z[k].im + dpi * z[k].re + pi;
                dpr = t1;
                dpi = t2;
                t1 = pr * z[k].re - pi * z[k].im + c[i];
                t2 = pr * z[k].im + pi * z[k].re;
                pr = t1;
                pi = t2;
            }
            if (pr == 0 && pi == 0) continue;  // sitting exactly on a root
            den = dpr * dpr + dpi * dpi;
            if (den == 0) {
                // landed on a critical point; nudge and retry next sweep
                z[k].re += tiny * (1 + abs(z[k].re));
                moved = true;
                continue;
            }
            nr = (pr * dpr + pi * dpi) / den;
            ni = (pi * dpr - pr * dpi) / den;
            sr = 0;
            si = 0;
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                dr = z[k].re - z[j].re;
                di = z[k].im - z[j].im;
                dd = dr * dr + di * di;
                if (dd == 0) {
                    dr = tiny;
                    dd = tiny * tiny;
                }
                sr += dr / dd;
                si -= di / dd;
            }
            tr = 1 - (nr * sr - ni * si);
            ti = -(nr * si + ni * sr);
            td = tr * tr + ti * ti;
            if (td == 0) {
                wr = nr;  // fall back to a plain Newton step
                wi = ni;
            } else {
                wr = (nr * tr + ni * ti) / td;
                wi = (ni * tr - nr * ti) / td;
            }
            z[k].re -= wr;
            z[k].im -= wi;
            t1 = abs(wr) + abs(wi);
            t2 = eps * (1 + abs(z[k].re) + abs(z[k].im));
            if (t1 > t2) moved = true;
        }
        if (!moved) break;
    }
    return z;
}

// |p(z)| relative to Σ|c_i||z|^i, both at working precision. Scale-free, so
// the 2^-(bits/2) convergence threshold is meaningful for any coefficient
// normalization.
mpf_class relative_residual(const std::vector<mpf_class>& c, const Cplx& z, int prec) {
    const int d = (int)c.size() - 1;
    mpf_class vr(c[d], prec), vi(0, prec), scale(0, prec), az(0, prec);
    mpf_class t1(0, prec), t2(0, prec);
    az = sqrt(z.re * z.re + z.im * z.im);
    scale = abs(c[d]);
    for (int i = d - 1; i >= 0; --i) {
        t1 = vr * z.re - vi * z.im + c[i];
        t2 = vr * z.im + vi * z.re;
        vr = t1;
        vi = t2;
        scale = scale * az + abs(c[i]);
    }
    mpf_class num(0, prec);
    num = sqrt(vr * vr + vi * vi);
    if (scale == 0) return num;
    num /= scale;
    return num;
}

}  // namespace

RootSet complex_roots(const Poly& p, int float_bits) {
    if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
    if (float_bits < 16) throw std::invalid_argument("complex_roots: float_bits must be >= 16");
    RootSet rs;
    rs.float_bits = float_bits;
    if (p.degree() == 0) return rs;
    const int prec = float_bits;

    // Peel off the root at 0 (x^val | p) so the deflated polynomial has a
    // nonzero constant term; those roots are exact, residual 0.
    const int val = p.valuation();
    Poly work = p;
    if (val > 0) {
        std::vector<Rational> cs(p.coeffs().begin() + val, p.coeffs().end());
        work = Poly(std::move(cs));
        for (int i = 0; i < val; ++i) {
            ComplexRoot zero;
            zero.re = mpf_class(0, prec);
            zero.im = mpf_class(0, prec);
            zero.residual = mpf_class(0, prec);
            zero.is_real = true;
            zero.converged = true;
            zero.multiplicity = val;
            rs.complex_roots.push_back(std::move(zero));
        }
    }

    std::vector<std::pair<int, Poly>> factors;
    if (work.degree() > 0) factors = squarefree_decompose(work);

    std::vector<mpf_class> wc;  // deflated input at working precision, for residuals
    wc.reserve(work.coeffs().size());
    for (const auto& q : work.coeffs()) wc.push_back(to_mpf(q, prec));

    mpf_class threshold(0, prec);
    mpf_set_ui(threshold.get_mpf_t(), 1);
    mpf_div_2exp(threshold.get_mpf_t(), threshold.get_mpf_t(), float_bits / 2);

    for (const auto& [mult, f] : factors) {
        std::vector<mpf_class> fc;
        fc.reserve(f.coeffs().size());
        for (const auto& q : f.coeffs()) fc.push_back(to_mpf(q, prec));
        std::vector<Cplx> zs = aberth(fc, prec);

        // Sturm decides how many of these are real; take the smallest-|Im|
        // ones, which pairs correctly since complex roots come conjugated.
        const int n_real = SturmChain(f).count_all();
        std::vector<int> order(zs.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
        std::sort(order.begin(), order.end(), [&zs](int a, int b) { return abs(zs[a].im) < abs(zs[b].im); });

        for (size_t rank = 0; rank < order.size(); ++rank) {
            Cplx& z = zs[order[rank]];
            const bool real = (int)rank < n_real;
            if (real) z.im = 0;
            ComplexRoot root;
            root.residual = relative_residual(wc, z, prec);
            root.re = z.re;
            root.im = z.im;
            root.is_real = real;
            root.converged = root.residual <= threshold;
            root.multiplicity = mult;
            for (int copy = 0; copy < mult; ++copy) rs.complex_roots.push_back(root);
        }
    }

    MultiplicityFlag flag = MultiplicityFlag::unknown;
    if (val <= 1 && (factors.empty() || (factors.size() == 1 && factors[0].first == 1))) flag = MultiplicityFlag::simple;
    for (auto& iv : isolate_real_roots(p)) rs.real_roots.emplace_back(std::move(iv), flag);
    return rs;
}

}  // namespace partpoly
