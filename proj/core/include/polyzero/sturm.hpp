#ifndef POLYZERO_STURM_HPP
#define POLYZERO_STURM_HPP

#include <vector>

#include "polyzero/poly.hpp"

namespace polyzero {

/// Canonical Sturm sequence of p: p, p', then negated remainders down to the
/// gcd. Each entry is kept integer-primitive (positive rescaling only, which
/// preserves every sign the count looks at).
class SturmSequence {
  public:
    explicit SturmSequence(const Poly& p);

    /// Number of distinct real roots of p in (lo, hi]. Endpoints may be
    /// infinite. Throws unless lo < hi.
    int count(const ExtendedRational& lo, const ExtendedRational& hi) const;
    int count(const Rational& lo, const Rational& hi) const {
        return count(ExtendedRational::of(lo), ExtendedRational::of(hi));
    }
    int count_all() const {
        return count(ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
    }

    int variations(const ExtendedRational& x) const;

  private:
    std::vector<Poly> seq_;
};

/// Convenience wrapper; prefer a cached SturmSequence when counting many
/// intervals of one polynomial.
int sturm_count(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi);
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace polyzero

#endif
