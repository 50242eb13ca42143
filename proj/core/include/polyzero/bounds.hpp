#ifndef POLYZERO_BOUNDS_HPP
#define POLYZERO_BOUNDS_HPP

#include <vector>

#include "polyzero/poly.hpp"

namespace polyzero {

/// Candidate counts from the sign rule: {v, v-2, ..., v mod 2} where v is the
/// number of sign variations. All members share parity.
struct SignRuleResult {
    std::vector<int> positive_candidates;
    std::vector<int> negative_candidates;
};

/// Sign-variation candidate sets for the positive and negative roots of p.
/// Zero coefficients are skipped; roots at the origin are excluded by
/// stripping the x^m factor first.
SignRuleResult descartes(const Poly& p);

int sign_variations(const Poly& p);

struct BulkBound {
    enum Rule { Lagrange, Cauchy };
    Rational radius;
    Rule rule;
};

/// radius = max(1, sum |a_i/a_n|, i < n): all real roots lie in [-r, r].
BulkBound lagrange_bound(const Poly& p);
/// radius = 1 + max |a_i/a_n|, i < n.
BulkBound cauchy_bound(const Poly& p);

/// (1+x)^n * p((a*x+b)/(x+1)), expanded exactly. The positive roots of the
/// image are in bijection with the roots of p inside (a, b). Requires a < b.
Poly mobius_shift(const Poly& p, const Rational& a, const Rational& b);

}  // namespace polyzero

#endif
