#ifndef POLYZERO_SPLITS_HPP
#define POLYZERO_SPLITS_HPP

#include <vector>

#include "polyzero/isolate.hpp"
#include "polyzero/report.hpp"
#include "polyzero/sylvester.hpp"

namespace polyzero {

/// p (scaled so the constant term is 1) written as q - r with q = a_n x^n + 1
/// anchored at (0, 1) and r = -(a_{n-1} x^{n-1} + ... + a_1 x) anchored at the
/// origin. q - r reproduces the normalized input exactly.
struct LeadingSplit {
    Poly q;
    Poly r;
    Poly normalized_input;
};

/// Requires p(0) != 0 (divide out x^m first when the origin is a root).
LeadingSplit make_leading_split(const Poly& p);

/// p written as f - g with f = x^k * F carrying a k-fold zero at the origin
/// and g = -(a_{k-1} x^{k-1} + ... + a_0). x^k * F - g reproduces p exactly.
struct OriginSplit {
    int k = 0;
    Poly F;
    Poly f;  // x^k * F
    Poly g;
    int f_extremal_cap = 0;  // n - 1, the origin counting as order k-1
    int g_extremal_cap = 0;  // k - 2
};

OriginSplit make_origin_split(const Poly& p, int k);

/// The tangency pairs of a parametric split: real parameter values where the
/// discriminant vanishes, each paired with the locus of the multiple root it
/// creates. Pairs are recovered from the real roots chi of the contact
/// equation n*p(chi) - chi*p'(chi) = 0 (which does not involve the parameter)
/// through the exact map alpha(chi) solving p'(chi) = 0, so every returned
/// pair is certified by construction. Parameter values of 0 are discarded for
/// leading splits (the instantiation would drop degree).
std::vector<TangencyData> tangency_set(const ParamPoly& pp);

/// Real roots of r(x) = 1: where the q-curve with zeroed leading coefficient
/// meets the r-curve. Equivalently the roots of the input with its leading
/// term deleted.
std::vector<AlgebraicReal> sigma_set(const LeadingSplit& split);

/// Tangency-based analysis for 2 <= degree <= 5 (degree <= 3 delegates to the
/// closed-form classification). Throws for degree > 5.
RootCountReport analyze_leading_split(const Poly& p);

/// Sign/parity cell analysis between the isolated roots of f and g.
RootCountReport analyze_origin_split(const OriginSplit& split, const Rational& width_budget);

/// Recursion driver: leading split up to degree 5, split-and-recurse above.
RootCountReport analyze_recursive(const Poly& p, const Rational& width_budget);

/// Constant-term variant: monic-normalizes the input, treats the constant
/// coefficient as the unknown, and compares the actual constant against the
/// real roots of the discriminant in that unknown. Degree <= 5.
RootCountReport analyze_constant_split(const Poly& p, const Rational& width_budget);

/// Discriminant of the input in its constant coefficient (degree n-1 there),
/// exposed for the constant-split flow.
struct ConstantSplit {
    Poly monic_input;
    Poly gamma_discriminant;
};
ConstantSplit make_constant_split(const Poly& p);

}  // namespace polyzero

#endif
