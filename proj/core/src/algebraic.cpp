#include "polyzero/algebraic.hpp"

#include <sstream>
#include <stdexcept>

#include "polyzero/sturm.hpp"

namespace polyzero {

AlgebraicReal::AlgebraicReal(Poly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) throw std::domain_error("AlgebraicReal: empty enclosure");
    int sl = defining_.sign_at(lo_), sh = defining_.sign_at(hi_);
    if (sl == 0 || sh == 0 || sl == sh)
        throw std::domain_error("AlgebraicReal: enclosure not sign-certified");
}

const Rational& AlgebraicReal::rational_value() const {
    if (!exact_) throw std::logic_error("AlgebraicReal: not an exact rational");
    return lo_;
}

void AlgebraicReal::refine_step() const {
    if (exact_) return;
    Rational mid = Rational::mid(lo_, hi_);
    int sm = defining_.sign_at(mid);
    if (sm == 0) {
        lo_ = hi_ = mid;
        const_cast<AlgebraicReal*>(this)->exact_ = true;
        return;
    }
    if (sm == defining_.sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicReal::refine_below(const Rational& width) const {
    while (!exact_ && !(hi_ - lo_ < width)) refine_step();
}

int AlgebraicReal::sign() const {
    int c = compare(Rational(0));
    return c;
}

int AlgebraicReal::compare(const Rational& r) const {
    if (exact_) return lo_ == r ? 0 : (lo_ < r ? -1 : 1);
    if (r <= lo_) return 1;   // value lies strictly above lo
    if (r >= hi_) return -1;  // and strictly below hi
    int sr = defining_.sign_at(r);
    if (sr == 0) return 0;  // the single root inside the enclosure is r itself
    return sr == defining_.sign_at(lo_) ? 1 : -1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (o.exact_) return compare(o.lo_);
    if (exact_) return -o.compare(lo_);
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    // Overlapping enclosures: the values are equal exactly when a common root
    // of the two defining polynomials sits in the overlap (each enclosure
    // isolates a single root of its own polynomial).
    Poly g = Poly::gcd(defining_, o.defining_);
    if (g.degree() >= 1) {
        Rational a = lo_ < o.lo_ ? o.lo_ : lo_;
        Rational b = hi_ < o.hi_ ? hi_ : o.hi_;
        if (a < b && sturm_count(g, a, b) > 0) return 0;
    }
    while (true) {
        if (hi_ <= o.lo_) return -1;
        if (o.hi_ <= lo_) return 1;
        refine_step();
        o.refine_step();
        if (exact_) return -o.compare(lo_);
        if (o.exact_) return compare(o.lo_);
    }
}

int AlgebraicReal::sign_of(const Poly& h) const {
    if (h.is_zero()) return 0;
    if (exact_) return h.sign_at(lo_);
    Poly g = Poly::gcd(defining_, h);
    if (g.degree() >= 1 && sturm_count(g, lo_, hi_) > 0) return 0;
    // h does not vanish here; shrink the enclosure until it is free of roots
    // of h, then any endpoint carries the sign.
    SturmSequence sh(h);
    while (true) {
        if (h.sign_at(lo_) != 0 && h.sign_at(hi_) != 0 && sh.count(lo_, hi_) == 0)
            return h.sign_at(lo_);
        refine_step();
        if (exact_) return h.sign_at(lo_);
    }
}

double AlgebraicReal::to_double() const {
    if (exact_) return lo_.to_double();
    Rational target(1, 1L << 30);
    for (int i = 0; i < 128 && !exact_ && !(hi_ - lo_ < target); ++i) refine_step();
    return Rational::mid(lo_, hi_).to_double();
}

std::string AlgebraicReal::brief() const {
    if (exact_) return lo_.str();
    std::ostringstream os;
    os << "~" << to_double();
    return os.str();
}

AlgebraicReal AlgebraicReal::operator-() const {
    if (exact_) return AlgebraicReal(-lo_);
    return AlgebraicReal(defining_.reflected(), -hi_, -lo_);
}

}  // namespace polyzero
