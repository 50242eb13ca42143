#ifndef POLYZERO_LOWDEGREE_HPP
#define POLYZERO_LOWDEGREE_HPP

#include <string>
#include <vector>

#include "polyzero/report.hpp"

namespace polyzero {

/// Structured label for the cubic decision tree: sign octant of (a, b, c),
/// the discriminant-shape threshold on c^2 against 3b and 4b, and the
/// position of -c/b relative to -(1/a)^(1/3).
struct CubicCaseTag {
    int sign_a = 0, sign_b = 0, sign_c = 0;
    enum Threshold {
        C2Ge4b,
        C2Eq4b,
        C2Between3b4b,
        C2Eq3b,
        C2Lt3b,
        ThresholdNA
    } threshold = ThresholdNA;
    enum Position { Left, Equal, Right, PositionNA } position = PositionNA;
    std::string detail;

    std::string str() const;
};

/// Full analytic classification of a x^3 + b x^2 + c x + 1 = 0.
struct CubicClassification {
    CubicCaseTag case_tag;
    std::vector<TangencyData> tangencies;     // relevant (alpha, chi) pairs
    std::vector<AlgebraicReal> sigma_points;  // real roots of b x^2 + c x + 1
    RootCountReport verdict;
};

/// a x + 1 = 0. The root -1/a always exists; positive exactly when a < 0.
RootCountReport classify_linear(const Rational& a);

/// a x^2 + b x + 1 = 0, classified by the sign of b^2 - 4a with the roots
/// positioned against +-1/sqrt(|a|).
RootCountReport classify_quadratic(const Rational& a, const Rational& b);

/// a x^3 + c x + 1 = 0. The critical leading coefficient is -4c^3/27; the
/// double root it creates sits at -3/(2c) and the simple one at 3/c.
RootCountReport classify_depressed_cubic(const Rational& a, const Rational& c);

/// a x^3 + b x^2 + c x + 1 = 0, the complete eight-octant decision tree.
/// b = 0 routes to the depressed form; a < 0 is solved by reflecting
/// (a,b,c) -> (-a,b,-c) and mirroring the verdict.
CubicClassification classify_cubic(const Rational& a, const Rational& b, const Rational& c);

}  // namespace polyzero

#endif
