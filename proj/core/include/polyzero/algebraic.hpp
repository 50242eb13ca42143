#ifndef POLYZERO_ALGEBRAIC_HPP
#define POLYZERO_ALGEBRAIC_HPP

#include <string>

#include "polyzero/poly.hpp"

namespace polyzero {

/// A real algebraic number: either an exact rational, or the unique root of a
/// defining polynomial inside an open rational enclosure (lo, hi) across which
/// the defining polynomial changes sign.
///
/// Every decision (comparison, sign of a polynomial at the point) is exact;
/// the enclosure is refined on demand and refinement never changes the value,
/// so it is allowed on const objects.
class AlgebraicReal {
  public:
    AlgebraicReal() : exact_(true) {}
    explicit AlgebraicReal(Rational r)
        : lo_(std::move(r)), hi_(lo_), exact_(true) {}
    /// defining must have exactly one root in (lo, hi), with nonzero values of
    /// opposite sign at the endpoints.
    AlgebraicReal(Poly defining, Rational lo, Rational hi);

    bool is_rational() const { return exact_; }
    const Rational& rational_value() const;
    const Poly& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    void refine_step() const;
    void refine_below(const Rational& width) const;

    int sign() const;
    /// -1, 0, +1 as this value is below, equal to, above r. Exact.
    int compare(const Rational& r) const;
    int compare(const AlgebraicReal& o) const;
    /// Exact sign of h evaluated at this point.
    int sign_of(const Poly& h) const;

    double to_double() const;
    /// Short decimal rendering for logs, e.g. "~-1.2599" or "3/8".
    std::string brief() const;

    AlgebraicReal operator-() const;

    friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) {
        return a.compare(b) < 0;
    }
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
        return a.compare(b) == 0;
    }

  private:
    Poly defining_;
    mutable Rational lo_, hi_;
    bool exact_ = false;
};

}  // namespace polyzero

#endif
