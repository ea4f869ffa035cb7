#pragma once

#include <vector>

#include "partpoly/poly.hpp"
#include "partpoly/rational.hpp"
#include "partpoly/report.hpp"

namespace partpoly {

/// P_0 .. P_{n_max}, where Σ_n P_n(z) q^n = Π_k (1 − q^k)^{−z}.
/// Immutable after gen_table; share freely across threads.
struct EtaTable {
    int n_max = -1;
    std::vector<Poly> polys;

    const Poly& P(int n) const;
};

/// Builds the table by the recurrence n·P_n(x) = x·Σ_{k=1}^{n} σ(k)·P_{n−k}(x).
EtaTable gen_table(int n_max);

/// Coefficient of x^m in P_n(x) by direct summation over all compositions of
/// n into m positive parts: (1/m!)·Σ Π σ(k_i)/k_i. Exponential in n; kept as
/// an independent oracle. Throws if n exceeds `cap` (raise it deliberately).
Rational kostant_coeff(int n, int m, int cap = 14);

/// Σ_{k=1}^{n} C(n−1,k−1)·x^k/k!, a coefficientwise lower bound for P_n.
Poly laguerre_lower(int n);

/// Asserts P_n − laguerre_lower(n) has no negative coefficient, 1 ≤ n ≤ n_max.
ScanReport check_laguerre_bound(const EtaTable& table);

/// P_0(x) .. P_{n_max}(x) at a fixed rational x.
struct ValueSequence {
    Rational x;
    int n_max = -1;
    std::vector<Rational> values;
};

/// Value recurrence without polynomial construction; integer x takes an
/// all-mpz path (the division by n is exact there), so n_max ~10⁴ is cheap.
ValueSequence eval_sequence(const Rational& x, int n_max);

/// Σ_{i+j=n} P_i(x1)·P_j(x2) = P_n(x1+x2), exactly.
bool convolution_check(int n, const Rational& x1, const Rational& x2, const EtaTable& table);

/// P_n'(x) = Σ_{k=1}^{n} σ(k)/k · P_{n−k}(x) as a polynomial identity, all n ≤ n_max.
ScanReport derivative_identity_check(const EtaTable& table);

/// p(0) .. p(n_max) by the classical parts DP; independent of the eta
/// recurrence, used to cross-check P_n(1).
std::vector<Integer> partition_numbers(int n_max);

}  // namespace partpoly
