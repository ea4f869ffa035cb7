// Acceptance gate: one line per criterion, PASS/FAIL plus wall time.
// Exit code is the number of failed criteria. Pass criterion numbers as
// arguments to run a subset (e.g. "acceptance 7 13").

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "partpoly/eta.hpp"
#include "partpoly/inequality.hpp"
#include "partpoly/io.hpp"
#include "partpoly/roots.hpp"
#include "partpoly/verify.hpp"

using namespace partpoly;

namespace {

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

const EtaTable& table40() {
    static const EtaTable t = gen_table(40);
    return t;
}

bool expect(bool ok, const std::string& what, std::string& detail) {
    if (!ok) detail += "    failed: " + what + "\n";
    return ok;
}

bool report_pass(const TableReport& rep, std::string& detail) {
    if (rep.pass()) return true;
    std::istringstream in(rep.summary());
    std::string line;
    while (std::getline(in, line)) detail += "    " + line + "\n";
    return false;
}

// 1. Table of difference polynomials at b = 0
bool criterion1(std::string& detail) {
    return report_pass(reproduce(TableId::T1_delta_a0, table40()), detail);
}

// 2. q(n) decimals plus the exact descent chain
bool criterion2(std::string& detail) {
    bool ok = report_pass(reproduce(TableId::T2_qn, table40()), detail);
    ScanReport chain = q_chain_check(30);
    ok &= expect(chain.pass(), "q chain check", detail);
    std::vector<Integer> p = partition_numbers(10);
    ok &= expect(make_rational(p[5], p[4]) == make_rational(p[10], p[9]), "q(5) = q(10)", detail);
    ok &= expect(make_rational(p[7], p[6]) == make_rational(p[9], p[8]), "q(7) = q(9)", detail);
    return ok;
}

// 3. Even-b sporadic sets and thresholds, a scanned to 200
bool criterion3(std::string& detail) {
    return report_pass(reproduce(TableId::T3_T2data, table40()), detail);
}

// 4. Exact closed forms
bool criterion4(std::string& detail) {
    const EtaTable& t = table40();
    Poly x2 = Poly::monomial(2);
    bool ok = expect(delta(3, 1, t).poly * Rational(12) == x2 * Poly::from_int_coeffs({11, 0, 1}),
                     "12*delta_{3,1} = x^2(x^2+11)", detail);
    ok &= expect(delta(4, 1, t).poly * Rational(24) == x2 * Poly::from_int_coeffs({6, 11, 6, 1}),
                 "24*delta_{4,1} = x^2(x^3+6x^2+11x+6)", detail);
    Poly f4 = Poly::monomial(1) * Poly::from_int_coeffs({1, 1}) * Poly::from_int_coeffs({-1, 1}) *
              Poly::from_int_coeffs({-2, 1});
    ok &= expect(fab(4, 2, Rational(2), t).poly * Rational(72) == f4,
                 "72*F_{4,2} = x(x+1)(x-1)(x-2) at x0 = 2", detail);
    return ok;
}

// 5. Quotients at x0 = 2 and the sign of delta_{6,4}(2)
bool criterion5(std::string& detail) {
    const EtaTable& t = table40();
    bool ok = expect(quotient_at(0, Rational(2), t) == Rational(2), "P_1/P_0 at 2 is 2", detail);
    ok &= expect(quotient_at(1, Rational(2), t) == make_rational(5, 2), "P_2/P_1 at 2 is 5/2", detail);
    ok &= expect(quotient_at(2, Rational(2), t) == Rational(2), "P_3/P_2 at 2 is 2", detail);
    ok &= expect(delta(6, 4, t).poly.eval(Rational(2)) < Rational(0), "delta_{6,4}(2) < 0", detail);
    return ok;
}

// 6. Monotone-numerator rows and the two assumption certificates
bool criterion6(std::string& detail) {
    const EtaTable& t = table40();
    bool ok = report_pass(reproduce(TableId::T4_Nb, t), detail);
    const Rational x_a = make_rational(97, 125);  // 0.776
    for (int b = 0; b <= 6; ++b)
        ok &= expect(assumption1_certificate(b, x_a, t).pass(),
                     "assumption1 at b = " + std::to_string(b), detail);
    const Rational x_b = make_rational(10277, 5000);  // 2.0554
    for (int b = 1; b <= 6; ++b)
        ok &= expect(assumption2_certificate(b, x_b, t).pass(),
                     "assumption2 at b = " + std::to_string(b), detail);
    ok &= expect(!assumption2_certificate(5, Rational(2), t).pass(),
                 "assumption2 must fail at b = 5, x0 = 2", detail);
    return ok;
}

// 7. Smallest base points, 140-bit refinement, 37-digit comparison
bool criterion7(std::string& detail) {
    return report_pass(reproduce(TableId::T6_smallest_x0, table40()), detail);
}

// 8. Quotient decimals at 2.0554
bool criterion8(std::string& detail) {
    return report_pass(reproduce(TableId::T5_quotients, table40()), detail);
}

// 9. Bound table plus its exact rational form at integer x
bool criterion9(std::string& detail) {
    bool ok = report_pass(reproduce(TableId::T7_B0, table40()), detail);
    for (int x = 2; x <= 5; ++x) {
        Rational expect_val = 2 * pow_rational(Rational(x), 11) + make_rational(x, 24);
        ok &= expect(b0_bound(Rational(x)) == expect_val,
                     "b0_bound(" + std::to_string(x) + ") = 2x^11 + x/24", detail);
    }
    return ok;
}

// 10. Desk-scale log-concavity scans
bool criterion10(std::string& detail) {
    ScanReport cft = scan_cft(50, 10);
    bool ok = expect(cft.pass(), "cft scan verdict", detail);
    ok &= expect(cft.exceptions == std::vector<std::vector<std::string>>{{"2", "6", "4"}},
                 "exception set is exactly {(2,6,4)}", detail);

    for (int k = 2; k <= 5; ++k) {
        ValueSequence seq = eval_sequence(Rational(k), 51);
        const std::vector<Rational>& v = seq.values;
        int lo = k == 2 ? 6 : 1;
        for (int n = lo; n <= 50; ++n)
            ok &= expect(v[n] * v[n] >= v[n - 1] * v[n + 1],
                         "p_{-" + std::to_string(k) + "} log-concave at n = " + std::to_string(n),
                         detail);
    }

    std::vector<Integer> p = partition_numbers(101);
    for (int n = 1; n <= 100; ++n) {
        Integer lc = p[n] * p[n] - p[n - 1] * p[n + 1];
        bool expect_nonneg = n >= 26 || n % 2 == 0;
        ok &= expect(expect_nonneg == (lc >= 0),
                     "p(n) log-concavity pattern at n = " + std::to_string(n), detail);
    }
    return ok;
}

// 11. Grid scan from the per-index base points plus the derivative tail check
bool criterion11(std::string& detail) {
    const EtaTable& t = table40();
    bool ok = true;
    for (int b = 0; b <= 3; ++b) {
        Rational x0 = (b % 2 == 1) ? Rational(1) : Rational(2);
        int a0 = b == 0 ? 3 : b + 2;
        std::vector<Rational> grid;
        for (int j = 0; j <= 16; ++j) grid.push_back(x0 + make_rational(j, 4));
        ScanReport scan = scan_delta_sign(b, a0, 40, grid, t);
        ok &= expect(scan.pass(), "sign scan at b = " + std::to_string(b), detail);
        for (int a = a0; a <= 20; ++a)
            ok &= expect(derivative_positive_check(a, b, x0, t),
                         "derivative check at a = " + std::to_string(a) + ", b = " + std::to_string(b),
                         detail);
    }
    return ok;
}

// 12. Independent oracle equivalences
bool criterion12(std::string& detail) {
    const EtaTable& t = table40();
    bool ok = true;
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            ok &= expect(t.P(n).coeff(m) == kostant_coeff(n, m),
                         "composition-sum coefficient (" + std::to_string(n) + "," + std::to_string(m) + ")",
                         detail);
    std::vector<Integer> p = partition_numbers(30);
    for (int n = 0; n <= 30; ++n)
        ok &= expect(t.P(n).eval(Rational(1)) == Rational(p[n]),
                     "partition DP at n = " + std::to_string(n), detail);
    ok &= expect(derivative_identity_check(t).pass(), "derivative identity through n = 40", detail);
    ok &= expect(check_laguerre_bound(t).pass(), "coefficient lower bound through n = 40", detail);
    std::vector<Rational> grid = {Rational(1), Rational(2), Rational(3), make_rational(1, 2),
                                  make_rational(5, 2)};
    for (const Rational& x1 : grid)
        for (const Rational& x2 : grid)
            for (int n = 0; n <= 15; ++n)
                ok &= expect(convolution_check(n, x1, x2, t), "convolution identity", detail);
    return ok;
}

// 13. Asymptotic window at one large instance, plus boundary properties
bool criterion13(std::string& detail) {
    MainTermResult big = main_term(4150, 4100, Rational(2), 128);
    bool ok = expect(big.valid, "hypothesis holds at b = 4100, x = 2", detail);
    ok &= expect(big.precision_ok, "128-bit and 256-bit runs agree", detail);
    ok &= expect(big.ratio_in_window, "delta within [1/3, 5/3] of the main term (ratio " + big.ratio + ")",
                 detail);

    // boundary: smallest valid integer b at x = 2 is 4097 (b - 1/12 >= 4096)
    ok &= expect(!main_term(4098, 4096, Rational(2), 64).valid, "b = 4096 rejected at x = 2", detail);
    ok &= expect(main_term(4099, 4097, Rational(2), 64).valid, "b = 4097 accepted at x = 2", detail);
    // zero main term exactly when a - 1 = b, matching delta = 0
    MainTermResult zero = main_term(60, 59, Rational(2), 64);
    ok &= expect(zero.ratio.empty() && zero.ratio_in_window, "zero main term matches delta_{60,59} = 0",
                 detail);
    return ok;
}

// 14. Figure datasets with residual and real-column checks
bool criterion14(std::string& detail) {
    VerifyOptions opts;  // 113-bit floats, hardware threads
    bool ok = report_pass(reproduce(TableId::FIG1, table40(), opts), detail);
    ok &= report_pass(reproduce(TableId::FIG2, table40(), opts), detail);

    std::filesystem::path dir = std::filesystem::temp_directory_path() / "partpoly_acceptance";
    std::filesystem::remove_all(dir);
    std::string f1 = figure_dataset(TableId::FIG1, 30, table40(), opts, dir.string());
    std::string f2 = figure_dataset(TableId::FIG2, 40, table40(), opts, dir.string());
    ok &= expect(std::filesystem::file_size(f1) > 0, "figure 1 CSV nonempty", detail);
    ok &= expect(std::filesystem::file_size(f2) > 0, "figure 2 CSV nonempty", detail);
    std::filesystem::remove_all(dir);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    std::vector<Criterion> criteria = {
        {1, "difference-polynomial table at b = 0", 1.0, criterion1},
        {2, "q(n) decimals and descent chain", 1.0, criterion2},
        {3, "even-b sporadic sets and thresholds", 30.0, criterion3},
        {4, "closed forms for small difference polynomials", 5.0, criterion4},
        {5, "quotients at x0 = 2 and delta_{6,4}(2) < 0", 5.0, criterion5},
        {6, "monotone-numerator rows and assumption certificates", 10.0, criterion6},
        {7, "smallest base points at 140 bits", 10.0, criterion7},
        {8, "quotient decimals at 2.0554", 5.0, criterion8},
        {9, "bound table and exact forms", 5.0, criterion9},
        {10, "log-concavity scans", 10.0, criterion10},
        {11, "grid scan and derivative tail checks", 60.0, criterion11},
        {12, "independent oracle equivalences", 30.0, criterion12},
        {13, "asymptotic main-term window", 600.0, criterion13},
        {14, "figure datasets", 120.0, criterion14},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!only.empty() && only.find(c.number) == only.end()) continue;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail += std::string("    exception: ") + e.what() + "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            ok = false;
            detail += "    over budget: " + std::to_string(secs) + " s > " +
                      std::to_string(c.budget_seconds) + " s\n";
        }
        std::printf("%s  %2d  %-52s %8.2f s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs);
        if (!ok) {
            std::fputs(detail.c_str(), stdout);
            ++failures;
        }
    }
    return failures;
}
