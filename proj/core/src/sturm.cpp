#include "polyzero/sturm.hpp"

#include <stdexcept>

namespace polyzero {

SturmSequence::SturmSequence(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("SturmSequence: zero polynomial");
    // Entries are rescaled by positive constants only; that keeps every sign
    // the variation count inspects.
    auto scaled = [](const Poly& q) { return q / q.content(); };
    seq_.push_back(scaled(p));
    if (p.degree() == 0) return;
    seq_.push_back(scaled(p.derivative()));
    while (seq_.back().degree() > 0) {
        Poly r = seq_[seq_.size() - 2].divrem(seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back(scaled(-r));
    }
}

int SturmSequence::variations(const ExtendedRational& x) const {
    int count = 0, prev = 0;
    for (const Poly& q : seq_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmSequence::count(const ExtendedRational& lo, const ExtendedRational& hi) const {
    if (!(lo < hi)) throw std::domain_error("sturm_count: empty interval");
    return variations(lo) - variations(hi);
}

int sturm_count(const Poly& p, const ExtendedRational& lo, const ExtendedRational& hi) {
    return SturmSequence(p).count(lo, hi);
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
    return SturmSequence(p).count(lo, hi);
}

}  // namespace polyzero
