#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partpoly/eta.hpp"
#include "partpoly/poly.hpp"
#include "partpoly/rational.hpp"
#include "partpoly/report.hpp"
#include "partpoly/roots.hpp"

namespace partpoly {

/// Δ_{a,b} = P_{a−1}·P_{b+1} − P_a·P_b. Zero polynomial when a = b+1;
/// leading coefficient (a−b−1)/(a!·(b+1)!) when a > b+1; Δ(0) = 0 always.
struct DeltaPoly {
    int a = 0;
    int b = 0;
    Poly poly;
};

DeltaPoly delta(int a, int b, const EtaTable& table);

/// P_{a,b} := P_a·P_b − P_{a+b}.
Poly bo_poly(int a, int b, const EtaTable& table);

/// Checks p_{−k}(n−1)·p_{−k}(m+1) >= p_{−k}(n)·p_{−k}(m) for n > m >= 1,
/// n <= n_max, 2 <= k <= k_max. The single known violation (2,6,4) is the
/// check's expected exception set whenever the scanned range covers it.
ScanReport scan_cft(int n_max, int k_max);

/// Exact sign of Δ_{a,b} at every grid point, a_lo <= a <= a_hi; exceptions
/// are the points with negative value.
ScanReport scan_delta_sign(int b, int a_lo, int a_hi, const std::vector<Rational>& x_grid, const EtaTable& table);

/// q(n) := p(n)/p(n−1). Verifies exactly: (i) q(n+2) <= q(n) (n = 1 is the
/// lone counterexample, q(3) = 3/2 > 1 = q(1), and is expected);
/// (ii) q(27) >= q(n) for 27 <= n <= n_max; (iii) the full descent chain
/// q(2) > q(4) > q(6) > q(3) > ... > q(25) > q(27) with its two equalities
/// q(5) = q(10) and q(7) = q(9).
ScanReport q_chain_check(int n_max);

/// For even b, scans Δ_{a,b}(1) >= 0 over b+2 <= a <= a_scan_max. Returns
/// (A0, a1): the sporadic set of satisfying a below the threshold a1, and the
/// least a1 from which every scanned a satisfies the inequality.
std::pair<std::set<int>, int> corollary_T2(int b, int a_scan_max);

/// H_b = P_{b+1}/P_b − x/(b+1) as Hb_num/Hb_den; its tangent-line
/// linearization G_b at x0; the quotient-derivative numerator
/// N_b = P_{b+1}'·P_b − P_{b+1}·P_b'.
struct AuxPolys {
    int b = 0;
    Rational x0;
    Poly Hb_num;
    Poly Hb_den;
    Poly Gb;
    Poly Nb;
};

AuxPolys aux_polys(int b, const Rational& x0, const EtaTable& table);

/// Certifies N_b − P_b²/(b+1) >= 0 on [x0, ∞): first by nonnegativity of all
/// coefficients after shifting x -> x + x0, else by a Sturm root count of
/// zero in (x0, ∞) together with a nonnegative value at x0 (strengthened by
/// a positive leading coefficient when that value is exactly 0).
ScanReport assumption1_certificate(int b, const Rational& x0, const EtaTable& table);

/// Certifies, exactly: (i) N_k − P_k²/(b+1) >= 0 on [x0, ∞) for 0 <= k <= b
/// (same two-route certificate); (ii) P_{b+1}(x0)·P_k(x0) <=
/// P_{k+1}(x0)·P_b(x0) for 0 <= k <= b−1. For b = 1 a violation of the single
/// comparison (which only holds from x0 >= 3) goes into the notes and does
/// not change the verdict.
ScanReport assumption2_certificate(int b, const Rational& x0, const EtaTable& table);

/// Smallest x0 > 0 from which the quotient comparisons of
/// assumption2_certificate(ii) hold for every x >= x0: the largest
/// positive-to-negative crossing over 0 <= k <= b−1 of
/// g_k := P_{b+1}·P_k − P_{k+1}·P_b, refined to width <= 2^−precision_bits
/// (exact rational thresholds collapse to points).
Interval smallest_x0(int b, int precision_bits, const EtaTable& table);

/// Exact P_{b+1}(x0)/P_b(x0).
Rational quotient_at(int b, const Rational& x0, const EtaTable& table);

/// F_{a,b} = G_b·P_{a−1} − P_a, with G_b linearized at x0.
struct FabPoly {
    int a = 0;
    int b = 0;
    Rational x0;
    Poly poly;
};

FabPoly fab(int a, int b, const Rational& x0, const EtaTable& table);

/// True iff Δ_{a,b}' has no real root in (x0, ∞) and Δ_{a,b}'(x0+1) > 0,
/// i.e. the difference polynomial is strictly increasing past x0.
bool derivative_positive_check(int a, int b, const Rational& x0, const EtaTable& table);

/// max{2x^11 + x/24, 100/(x−24) + x/24}, exact. Pole at x = 24.
Rational b0_bound(const Rational& x);

/// π·(x/24)^(x/2+1)·(AB)^(−x/4−5/4)·e^(π√(2x/3)(√A+√B))·(√A−√B) with
/// A = a−1−x/24, B = b−x/24, evaluated at precision_bits and re-checked at
/// twice that; paired with the exact Δ_{a,b}(x) and the ratio window
/// [1/3, 5/3].
struct MainTermResult {
    bool valid = false;         // hypothesis B >= max{2x^11, 100/(x−24)}, checked exactly
    bool precision_ok = false;  // the two working precisions agree to precision_bits/2 bits
    bool ratio_in_window = false;
    std::string main_term;      // decimal, from the higher-precision run
    std::string delta_exact;    // decimal rendering of the exact value
    std::string ratio;          // decimal Δ / main term ("" when the main term is 0)
};

MainTermResult main_term(int a, int b, const Rational& x, int precision_bits);

}  // namespace partpoly
