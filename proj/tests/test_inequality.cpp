#include <algorithm>

#include "doctest.h"
#include "partpoly/eta.hpp"
#include "partpoly/inequality.hpp"

using namespace partpoly;

namespace {

const EtaTable& shared_table() {
    static const EtaTable table = gen_table(30);
    return table;
}

bool has_exception(const ScanReport& rep, const std::vector<std::string>& entry) {
    return std::find(rep.exceptions.begin(), rep.exceptions.end(), entry) != rep.exceptions.end();
}

}  // namespace

TEST_CASE("delta closed forms") {
    const EtaTable& t = shared_table();
    Poly x2 = Poly::monomial(2);

    // 12 * delta_{3,1} = x^2 (x^2 + 11)
    CHECK(delta(3, 1, t).poly * Rational(12) == x2 * Poly::from_int_coeffs({11, 0, 1}));
    // 24 * delta_{4,1} = x^2 (x^3 + 6x^2 + 11x + 6)
    CHECK(delta(4, 1, t).poly * Rational(24) == x2 * Poly::from_int_coeffs({6, 11, 6, 1}));
    // 144 * delta_{4,2} = x^2 (x - 2)(x^3 + 11x^2 + 71x + 61)
    CHECK(delta(4, 2, t).poly * Rational(144) ==
          x2 * Poly::from_int_coeffs({-2, 1}) * Poly::from_int_coeffs({61, 71, 11, 1}));
    // 2 * delta_{2,0} = x(x - 3)
    CHECK(delta(2, 0, t).poly * Rational(2) == Poly::from_int_coeffs({0, -3, 1}));
}

TEST_CASE("delta degenerate and boundary cases") {
    const EtaTable& t = shared_table();
    for (int a = 1; a <= 10; ++a) CHECK(delta(a, a - 1, t).poly.is_zero());
    CHECK(delta(4, 2, t).poly.eval(Rational(2)) == Rational(0));
    CHECK(delta(6, 4, t).poly.eval(Rational(2)) == Rational(-4));
    CHECK_THROWS_AS(delta(2, 2, t), std::invalid_argument);
    CHECK_THROWS_AS(delta(31, 0, t), std::invalid_argument);
}

TEST_CASE("delta degree and leading coefficient") {
    const EtaTable& t = shared_table();
    for (auto [a, b] : {std::pair{4, 1}, {7, 2}, {10, 5}, {12, 0}}) {
        Poly d = delta(a, b, t).poly;
        CHECK(d.degree() == a + b);
        Rational lead = Rational(a - b - 1) / Rational(factorial(a) * factorial(b + 1));
        CHECK(d.leading() == lead);
        CHECK(d.eval(Rational(0)) == Rational(0));
    }
}

TEST_CASE("delta_{a,0} equals the two-variable difference at (a-1, 1)") {
    const EtaTable& t = shared_table();
    for (int a = 2; a <= 30; ++a) CHECK(delta(a, 0, t).poly == bo_poly(a - 1, 1, t));
}

TEST_CASE("cft scan finds exactly the known exception") {
    ScanReport rep = scan_cft(50, 10);
    CHECK(rep.pass());
    REQUIRE(rep.exceptions.size() == 1);
    CHECK(rep.exceptions[0] == std::vector<std::string>{"2", "6", "4"});
    CHECK(rep.expected == rep.exceptions);
}

TEST_CASE("delta sign scan reports negative grid points") {
    const EtaTable& t = shared_table();
    ScanReport good = scan_delta_sign(1, 3, 20, {Rational(1), Rational(2), Rational(3)}, t);
    CHECK(good.pass());
    CHECK(good.exceptions.empty());

    // at x = 2 the values are 2-colored counts 1,2,5,10,20,36,65,...;
    // a = 6 is the lone negative: 36*36 - 65*20 = -4
    ScanReport bad = scan_delta_sign(4, 5, 10, {Rational(2)}, t);
    CHECK(!bad.pass());
    CHECK(has_exception(bad, {"6", "2"}));
    CHECK(bad.exceptions.size() == 1);

    // at x = 1 ordinary partition numbers appear and a = 8 joins in:
    // p(7)p(5) - p(8)p(4) = 105 - 110
    ScanReport ones = scan_delta_sign(4, 5, 10, {Rational(1)}, t);
    CHECK(has_exception(ones, {"6", "1"}));
    CHECK(has_exception(ones, {"8", "1"}));
    CHECK(ones.exceptions.size() == 2);
}

TEST_CASE("q chain holds with the single expected step exception") {
    ScanReport rep = q_chain_check(30);
    CHECK(rep.pass());
    CHECK(has_exception(rep, {"step", "1"}));
    CHECK(rep.exceptions.size() == 1);
    CHECK_THROWS_AS(q_chain_check(20), std::invalid_argument);
}

TEST_CASE("even-b threshold scan matches hand-computed b = 2") {
    // p: 1 1 2 3 5 7 11 -> a=4 fails (3*3 > 1*... ), a=5 holds, a=6 fails
    auto [A0, a1] = corollary_T2(2, 60);
    CHECK(A0 == std::set<int>{5});
    CHECK(a1 == 7);

    auto [A0b, a1b] = corollary_T2(6, 200);
    CHECK(A0b == std::set<int>{9, 11});
    CHECK(a1b == 13);

    auto [A0c, a1c] = corollary_T2(14, 200);
    CHECK(A0c.empty());
    CHECK(a1c == 17);
}

TEST_CASE("aux polynomials at a base point") {
    const EtaTable& t = shared_table();
    AuxPolys aux = aux_polys(1, Rational(1), t);
    // G_1 at x0=1: (x-1)/2 + P_2(1)/P_1(1) = (x+3)/2
    CHECK(aux.Gb == Poly::from_int_coeffs({3, 1}) / Rational(2));
    // N_1 = P_2' P_1 - P_2 P_1' = x^2/2
    CHECK(aux.Nb == Poly::monomial(2, make_rational(1, 2)));
    CHECK(aux.Hb_den == t.P(1));
    CHECK_THROWS_AS(aux_polys(1, Rational(0), t), std::domain_error);
}

TEST_CASE("fab closed form and pointwise invariant") {
    const EtaTable& t = shared_table();
    // 72 * F_{4,2} at x0 = 2: x(x+1)(x-1)(x-2)
    Poly expect = Poly::monomial(1) * Poly::from_int_coeffs({1, 1}) * Poly::from_int_coeffs({-1, 1}) *
                  Poly::from_int_coeffs({-2, 1});
    CHECK(fab(4, 2, Rational(2), t).poly * Rational(72) == expect);

    // F(x0) * P_b(x0) = delta(x0) whenever P_b(x0) != 0
    for (auto [a, b] : {std::pair{5, 2}, {8, 3}, {11, 1}}) {
        for (const Rational& x0 : {Rational(1), Rational(2), make_rational(5, 2)}) {
            Rational lhs = fab(a, b, x0, t).poly.eval(x0) * t.P(b).eval(x0);
            CHECK(lhs == delta(a, b, t).poly.eval(x0));
        }
    }
    CHECK_THROWS_AS(fab(2, 2, Rational(1), t), std::invalid_argument);
}

TEST_CASE("quotients at x0 = 2") {
    const EtaTable& t = shared_table();
    CHECK(quotient_at(0, Rational(2), t) == Rational(2));
    CHECK(quotient_at(1, Rational(2), t) == make_rational(5, 2));
    CHECK(quotient_at(2, Rational(2), t) == Rational(2));
    CHECK(delta(6, 4, t).poly.eval(Rational(2)) < Rational(0));
}

TEST_CASE("first assumption certificate at x0 = 0.776") {
    const EtaTable& t = shared_table();
    const Rational x0 = make_rational(97, 125);
    for (int b = 0; b <= 6; ++b) {
        ScanReport rep = assumption1_certificate(b, x0, t);
        CHECK(rep.pass());
    }
}

TEST_CASE("second assumption certificate across base points") {
    const EtaTable& t = shared_table();
    const Rational star = make_rational(10277, 5000);
    for (int b = 1; b <= 6; ++b) {
        ScanReport rep = assumption2_certificate(b, star, t);
        CHECK(rep.pass());
        CHECK((int)rep.certificates.size() == b + 1);
    }

    // at x0 = 2 the b = 5 quotient comparison k = 4 is the CFT counterexample
    ScanReport broken = assumption2_certificate(5, Rational(2), t);
    CHECK(!broken.pass());
    CHECK(has_exception(broken, {"quotient", "4"}));

    // x0 = 0: every certificate degenerates to plain coefficient positivity
    ScanReport zero = assumption2_certificate(3, Rational(0), t);
    CHECK(zero.pass());
    for (const Json& cert : zero.certificates)
        CHECK(cert.at("kind").get<std::string>() == "shifted-coefficients");
}

TEST_CASE("smallest_x0 snaps to 2 for b = 2, 3 and brackets b = 4") {
    const EtaTable& t = shared_table();
    Interval two = smallest_x0(2, 80, t);
    CHECK(two.is_point());
    CHECK(two.lo == Rational(2));

    Interval three = smallest_x0(3, 80, t);
    CHECK(three.is_point());
    CHECK(three.lo == Rational(2));

    Interval four = smallest_x0(4, 80, t);
    CHECK(!four.is_point());
    CHECK(decimal_string(four.midpoint(), 5) == "1.68819");
}

TEST_CASE("b0_bound exact values and pole") {
    CHECK(b0_bound(Rational(2)) == Rational(4096) + make_rational(1, 12));
    CHECK(b0_bound(Rational(3)) == Rational(354294) + make_rational(1, 8));
    CHECK(b0_bound(Rational(25)) == 2 * pow_rational(Rational(25), 11) + make_rational(25, 24));
    CHECK_THROWS_AS(b0_bound(Rational(24)), std::domain_error);
    CHECK_THROWS_AS(b0_bound(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(b0_bound(Rational(-3)), std::invalid_argument);
}

TEST_CASE("derivative_positive_check on hand-solvable cases") {
    const EtaTable& t = shared_table();
    // delta_{2,0}' = x - 3/2: no roots above 2, positive beyond
    CHECK(derivative_positive_check(2, 0, Rational(2), t));
    // but 3/2 > 1, so the check fails from x0 = 1
    CHECK(!derivative_positive_check(2, 0, Rational(1), t));
    // delta_{3,0}' = (3x^2 - 4)/3, roots at +-2/sqrt(3) < 2
    CHECK(derivative_positive_check(3, 0, Rational(2), t));
    // zero polynomial has no increasing tail
    CHECK(!derivative_positive_check(3, 2, Rational(1), t));
}

TEST_CASE("main term degenerate and invalid-hypothesis paths") {
    // a - 1 == b makes sqrt(A) - sqrt(B) exactly zero
    MainTermResult zero = main_term(5, 4, Rational(2), 64);
    CHECK(!zero.valid);  // b = 4 is far below 2 * 2^11
    CHECK(zero.precision_ok);
    CHECK(zero.ratio.empty());
    CHECK(zero.ratio_in_window);  // delta_{5,4} = 0 matches the zero main term

    // small b: hypothesis fails but the computation still reports numbers
    MainTermResult small = main_term(102, 100, Rational(2), 64);
    CHECK(!small.valid);
    CHECK(small.precision_ok);
    CHECK(!small.main_term.empty());
    CHECK(!small.ratio.empty());

    // x = 24 is never hypothesis-valid (the second bound has a pole there)
    CHECK(!main_term(10, 5, Rational(24), 64).valid);
    CHECK_THROWS_AS(main_term(5, 10, Rational(2), 64), std::invalid_argument);
    // B <= 0 is rejected: b = 0 at x = 2 gives B = -1/12
    CHECK_THROWS_AS(main_term(3, 0, Rational(2), 64), std::domain_error);
}

TEST_CASE("delta sign equivalence between polynomial and value recurrence") {
    const EtaTable& t = shared_table();
    for (auto [a, b] : {std::pair{6, 4}, {9, 3}, {14, 2}}) {
        for (const Rational& x : {Rational(1), Rational(2), make_rational(7, 2)}) {
            ValueSequence seq = eval_sequence(x, a);
            Rational direct = seq.values[a - 1] * seq.values[b + 1] - seq.values[a] * seq.values[b];
            CHECK(sign(direct) == sign(delta(a, b, t).poly.eval(x)));
        }
    }
}

TEST_CASE("partition log-concavity switches on at n = 26") {
    std::vector<Integer> p = partition_numbers(101);
    for (int n = 1; n <= 100; ++n) {
        Integer lc = p[n] * p[n] - p[n - 1] * p[n + 1];
        if (n >= 26 || n % 2 == 0)
            CHECK(lc >= 0);
        else
            CHECK(lc < 0);
    }
}
