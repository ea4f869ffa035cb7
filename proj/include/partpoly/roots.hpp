#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partpoly/poly.hpp"
#include "partpoly/rational.hpp"

namespace partpoly {

struct Interval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm chain of the square-free part of a polynomial, held as primitive
/// integer coefficient vectors. Build once, then count roots in as many
/// intervals as needed; all sign evaluations are exact.
class SturmChain {
public:
    explicit SturmChain(const Poly& p);

    /// Square-free part the chain was built on (same distinct real roots as p).
    const Poly& squarefree() const { return sf_; }

    /// Number of sign changes in the chain at x (zeros skipped).
    int changes_at(const Rational& x) const;
    int changes_at_pos_inf() const;
    int changes_at_neg_inf() const;

    /// Distinct real roots in (lo, hi]. Requires lo <= hi.
    int count(const Rational& lo, const Rational& hi) const;
    /// Distinct real roots in (lo, +inf).
    int count_above(const Rational& lo) const;
    int count_all() const;

    /// Integer B with every real root of p strictly inside (-B, B).
    const Rational& bound() const { return bound_; }

    /// Exact sign of the square-free part at x.
    int sign_sf(const Rational& x) const;

private:
    std::vector<std::vector<Integer>> seq_;
    Poly sf_;
    Rational bound_;
};

/// 1 + max |c_i| / |c_lead|; every root has absolute value strictly below it.
Rational cauchy_bound(const Poly& p);

/// Distinct real roots of p in (lo, hi] (one-shot; build a SturmChain to
/// amortize over many queries).
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Distinct real roots of p in (lo, +inf).
int sturm_count_above(const Poly& p, const Rational& lo);

/// Disjoint rational intervals, each holding exactly one distinct real root
/// of p and jointly covering them all. Point intervals mark exact rational
/// roots; every other interval brackets a sign change of the square-free part.
std::vector<Interval> isolate_real_roots(const Poly& p);

/// Same, restricted to roots in (lo, hi].
std::vector<Interval> isolate_real_roots_in(const SturmChain& chain, const Rational& lo, const Rational& hi);

/// Shrinks an isolating interval to width <= 2^-precision_bits by exact
/// bisection. A root that is itself rational collapses to a point interval.
/// Throws if iv does not bracket a sign change of the square-free part.
Interval refine(const Poly& p, const Interval& iv, int precision_bits);

/// Refined interval around the maximal real root, or nullopt if p has none.
std::optional<Interval> largest_real_root(const Poly& p, int precision_bits);

struct ComplexRoot {
    mpf_class re;
    mpf_class im;
    mpf_class residual;   // |p(z)| / Σ|c_i||z|^i at working precision (0 for exact roots)
    bool is_real = false;
    bool converged = false;
    int multiplicity = 1;
};

enum class MultiplicityFlag { simple, unknown };

struct RootSet {
    std::string source;
    int float_bits = 0;
    std::vector<std::pair<Interval, MultiplicityFlag>> real_roots;
    std::vector<ComplexRoot> complex_roots;
};

/// All roots of p (degree-many entries, repeated per multiplicity) by
/// square-free decomposition plus simultaneous Aberth–Ehrlich iteration at
/// float_bits precision. Entries are labeled real so that the labeled count
/// matches the Sturm real-root count exactly; real isolating intervals ride
/// along in real_roots.
RootSet complex_roots(const Poly& p, int float_bits);

/// Square-free factors of p with their multiplicities (constant content
/// dropped): p = c · Π factor^multiplicity.
std::vector<std::pair<int, Poly>> squarefree_decompose(const Poly& p);

}  // namespace partpoly
