#ifndef POLYZERO_ISOLATE_HPP
#define POLYZERO_ISOLATE_HPP

#include <vector>

#include "polyzero/algebraic.hpp"
#include "polyzero/poly.hpp"

namespace polyzero {

/// Interval certified to contain exactly one distinct real root of the
/// polynomial it was produced for, of the stated multiplicity. Point
/// intervals (lo == hi) are exact rational roots.
struct IsolationInterval {
    Rational lo, hi;
    enum Kind { Open, Point } kind = Open;
    int multiplicity = 1;

    bool contains(const Rational& x) const {
        return kind == Point ? x == lo : (lo < x && x < hi);
    }
};

/// Ordered, pairwise-disjoint isolation intervals for all distinct real roots.
struct RootList {
    std::vector<IsolationInterval> intervals;
    int degree_accounted = 0;  // degree of the polynomial analyzed

    int distinct_count() const { return static_cast<int>(intervals.size()); }
    int multiplicity_sum() const;
    int complex_pair_count() const {
        return (degree_accounted - multiplicity_sum()) / 2;
    }
};

/// A located real root with multiplicity; carries the exact machinery needed
/// to keep refining or comparing it.
struct AlgebraicRoot {
    AlgebraicReal value;
    int multiplicity = 1;
};

/// Isolates every distinct real root of p. Rational roots are screened first
/// (divisors of the trailing and leading integer coefficients) and reported
/// exactly; the rest come from Sturm bisection started at the Cauchy bound.
/// Open intervals are refined below width_budget. Throws on the zero
/// polynomial or width_budget <= 0.
RootList isolate_real_roots(const Poly& p, const Rational& width_budget);

/// Same computation, returned as refinable algebraic numbers sorted
/// increasingly.
std::vector<AlgebraicRoot> real_roots(const Poly& p);

/// Shrinks a certified interval below width_budget around the same root,
/// by sign-preserving bisection on the squarefree part. Throws if the
/// interval is not certified for p.
IsolationInterval refine(const Poly& p, const IsolationInterval& iv,
                         const Rational& width_budget);

/// Exact sign of p at x.
int sign_at(const Poly& p, const Rational& x);

/// Multiplicity of u as a root of p (0 when p(u) != 0). Exact.
int multiplicity_at(const Poly& p, const AlgebraicReal& u);

}  // namespace polyzero

#endif
