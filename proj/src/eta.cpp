#include "partpoly/eta.hpp"

#include <functional>
#include <stdexcept>

#include "partpoly/sigma.hpp"

namespace partpoly {

const Poly& EtaTable::P(int n) const {
    if (n < 0 || n > n_max)
        throw std::out_of_range("EtaTable: P_" + std::to_string(n) + " not in table (n_max=" + std::to_string(n_max) + ")");
    return polys[n];
}

EtaTable gen_table(int n_max) {
    if (n_max < 0) throw std::invalid_argument("gen_table: n_max must be >= 0");
    if (n_max > 0) sigma_prefill(n_max);
    EtaTable t;
    t.n_max = n_max;
    t.polys.reserve(n_max + 1);
    t.polys.push_back(Poly::constant(Rational(1)));
    for (int n = 1; n <= n_max; ++n) {
        Poly s;
        for (int k = 1; k <= n; ++k) s += Rational((long)sigma(k)) * t.polys[n - k];
        Poly p = Poly::monomial(1) * s;
        p /= Rational(n);
        t.polys.push_back(std::move(p));
    }
    return t;
}

Rational kostant_coeff(int n, int m, int cap) {
    if (m < 1 || m > n) throw std::invalid_argument("kostant_coeff: need 1 <= m <= n");
    if (n > cap)
        throw std::invalid_argument("kostant_coeff: n=" + std::to_string(n) + " exceeds cap=" + std::to_string(cap) +
                                    " (composition count grows as 2^(n-1); raise cap explicitly if intended)");
    sigma_prefill(n);
    std::vector<Rational> w(n + 1);  // w[k] = sigma(k)/k
    for (int k = 1; k <= n; ++k) w[k] = make_rational(Integer((long)sigma(k)), Integer(k));

    Rational total(0);
    // Walk all compositions (k_1..k_m) of n into positive parts, carrying the
    // partial product of the w[k_i].
    std::function<void(int, int, const Rational&)> walk = [&](int pos, int rem, const Rational& prod) {
        if (pos == m - 1) {
            total += prod * w[rem];
            return;
        }
        const int tail = m - 1 - pos;  // parts still to place after this one
        for (int k = 1; rem - k >= tail; ++k) walk(pos + 1, rem - k, prod * w[k]);
    };
    walk(0, n, Rational(1));
    return total / Rational(factorial(m));
}

Poly laguerre_lower(int n) {
    if (n < 1) throw std::invalid_argument("laguerre_lower: n must be >= 1");
    std::vector<Rational> cs(n + 1, Rational(0));
    for (int k = 1; k <= n; ++k) cs[k] = make_rational(binomial(n - 1, k - 1), factorial(k));
    return Poly(std::move(cs));
}

ScanReport check_laguerre_bound(const EtaTable& table) {
    ScanReport report;
    report.check = "laguerre_coefficient_bound";
    report.params["n_max"] = table.n_max;
    for (int n = 1; n <= table.n_max; ++n) {
        const Poly diff = table.P(n) - laguerre_lower(n);
        for (size_t m = 0; m < diff.coeffs().size(); ++m) {
            if (sign(diff.coeffs()[m]) < 0) {
                report.exceptions.push_back({std::to_string(n), std::to_string(m), rational_to_string(diff.coeffs()[m])});
                break;  // first offending coefficient per n is enough
            }
        }
    }
    return report;
}

ValueSequence eval_sequence(const Rational& x, int n_max) {
    if (n_max < 0) throw std::invalid_argument("eval_sequence: n_max must be >= 0");
    if (n_max > 0) sigma_prefill(n_max);
    ValueSequence vs;
    vs.x = x;
    vs.n_max = n_max;
    vs.values.reserve(n_max + 1);

    if (x.get_den() == 1) {
        // Integer x: every P_n(x) is an integer and the division by n is
        // exact, so the whole recurrence runs in mpz.
        const Integer xi = x.get_num();
        std::vector<Integer> v(n_max + 1);
        v[0] = 1;
        Integer acc;
        for (int n = 1; n <= n_max; ++n) {
            acc = 0;
            for (int k = 1; k <= n; ++k) acc += v[n - k] * (long)sigma(k);
            acc *= xi;
            mpz_divexact_ui(v[n].get_mpz_t(), acc.get_mpz_t(), n);
        }
        for (const auto& val : v) vs.values.emplace_back(val);
        return vs;
    }

    std::vector<Rational> v(n_max + 1);
    v[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += Rational((long)sigma(k)) * v[n - k];
        acc *= x;
        acc /= Rational(n);
        v[n] = std::move(acc);
    }
    vs.values = std::move(v);
    return vs;
}

bool convolution_check(int n, const Rational& x1, const Rational& x2, const EtaTable& table) {
    if (n < 0 || n > table.n_max) throw std::out_of_range("convolution_check: n outside table");
    Rational lhs(0);
    for (int i = 0; i <= n; ++i) lhs += table.P(i).eval(x1) * table.P(n - i).eval(x2);
    return lhs == table.P(n).eval(x1 + x2);
}

ScanReport derivative_identity_check(const EtaTable& table) {
    ScanReport report;
    report.check = "derivative_identity";
    report.params["n_max"] = table.n_max;
    if (table.n_max > 0) sigma_prefill(table.n_max);
    for (int n = 1; n <= table.n_max; ++n) {
        Poly rhs;
        for (int k = 1; k <= n; ++k) rhs += make_rational(Integer((long)sigma(k)), Integer(k)) * table.P(n - k);
        if (!(table.P(n).derivative() == rhs)) report.exceptions.push_back({std::to_string(n)});
    }
    return report;
}

std::vector<Integer> partition_numbers(int n_max) {
    if (n_max < 0) throw std::invalid_argument("partition_numbers: n_max must be >= 0");
    std::vector<Integer> dp(n_max + 1);
    dp[0] = 1;
    for (int k = 1; k <= n_max; ++k)
        for (int m = k; m <= n_max; ++m) dp[m] += dp[m - k];
    return dp;
}

}  // namespace partpoly
