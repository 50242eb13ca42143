#include "polyzero/isolate.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyzero/bounds.hpp"
#include "polyzero/sturm.hpp"

namespace polyzero {

int RootList::multiplicity_sum() const {
    int s = 0;
    for (const auto& iv : intervals) s += iv.multiplicity;
    return s;
}

int sign_at(const Poly& p, const Rational& x) {
    return p.sign_at(x);
}

int multiplicity_at(const Poly& p, const AlgebraicReal& u) {
    int mult = 0;
    Poly q = p;
    while (!q.is_constant() && u.sign_of(q) == 0) {
        ++mult;
        q = q.derivative();
    }
    return mult;
}

namespace {

// Divisors of |n| by trial division; empty when n is too hard to factor and
// the caller should fall back to interval isolation only.
std::vector<mpz_class> divisors_of(const mpz_class& n) {
    std::vector<mpz_class> divs;
    mpz_class m = abs(n);
    if (m == 0 || m > mpz_class("1000000000000000000")) return divs;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class rest = m;
    long budget = 2'000'000;
    for (mpz_class d = 2; d * d <= rest; ++d) {
        if (--budget < 0) return {};
        if (rest % d == 0) {
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    divs.push_back(1);
    for (const auto& [prime, exp] : factors) {
        size_t existing = divs.size();
        mpz_class pe = 1;
        for (int e = 1; e <= exp; ++e) {
            pe *= prime;
            for (size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

// Screens and deflates all rational roots of a squarefree primitive factor.
// Returns them and replaces f by the deflated cofactor.
std::vector<Rational> extract_rational_roots(Poly& f) {
    std::vector<Rational> roots;
    int m = f.order_at_zero();
    if (m > 0) {  // squarefree, so m == 1
        roots.emplace_back(0);
        f = f.divide_exact(Poly::x()).value();
    }
    if (f.degree() < 1) return roots;
    auto ps = divisors_of(f.coeff(0).num());
    auto qs = divisors_of(f.lead().num());
    if (ps.empty() || qs.empty()) return roots;
    for (const auto& pp : ps) {
        for (const auto& qq : qs) {
            for (int s : {1, -1}) {
                if (f.degree() < 1) return roots;
                Rational cand(mpq_class(s * pp, qq));
                if (f.sign_at(cand) == 0) {
                    roots.push_back(cand);
                    Poly lin(std::vector<Rational>{-cand, Rational(1)});
                    f = f.divide_exact(lin).value();
                }
            }
        }
    }
    return roots;
}

struct OpenInterval {
    Rational lo, hi;
};

// Sturm bisection on the half-open interval (lo, hi]. The right endpoint of
// the initial box is beyond the root bound, so a bisection point can be a
// root only when the rational-root screening bailed out; such hits surface
// as exact points, either directly or via the next split to the left.
void bisect(const SturmSequence& sturm, const Poly& f, const Rational& lo,
            const Rational& hi, int count, std::vector<OpenInterval>& out,
            std::vector<Rational>& points) {
    if (count == 0) return;
    if (count == 1) {
        if (f.sign_at(hi) == 0) {
            points.push_back(hi);
            return;
        }
        // The left endpoint may be an exact hit recorded by a sibling call;
        // nudge inward until the enclosure is sign-certified.
        Rational lo2 = lo;
        if (f.sign_at(lo2) == 0) {
            Rational step = (hi - lo) / Rational(2);
            while (true) {
                Rational cand = lo + step;
                if (f.sign_at(cand) != 0 && sturm.count(lo, cand) == 0) {
                    lo2 = cand;
                    break;
                }
                step /= Rational(2);
            }
        }
        out.push_back({lo2, hi});
        return;
    }
    Rational mid = Rational::mid(lo, hi);
    int left = sturm.count(lo, mid);
    bisect(sturm, f, lo, mid, left, out, points);
    bisect(sturm, f, mid, hi, count - left, out, points);
}

// Shrinks a sign-certified open interval below the width budget.
OpenInterval tighten(const Poly& f, OpenInterval iv, const Rational& width,
                     std::vector<Rational>& points) {
    int slo = f.sign_at(iv.lo);
    while (!(iv.hi - iv.lo < width)) {
        Rational mid = Rational::mid(iv.lo, iv.hi);
        int sm = f.sign_at(mid);
        if (sm == 0) {
            points.push_back(mid);
            return {mid, mid};
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

}  // namespace

std::vector<AlgebraicRoot> real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
    std::vector<AlgebraicRoot> out;
    if (p.degree() == 0) return out;

    for (auto& [factor, mult] : p.squarefree_decomposition()) {
        Poly f = factor;
        std::vector<Rational> rational_roots = extract_rational_roots(f);
        for (auto& r : rational_roots)
            out.push_back({AlgebraicReal(std::move(r)), mult});
        if (f.degree() >= 1) {
            Rational bound = cauchy_bound(f).radius + Rational(1);
            SturmSequence sturm(f);
            int total = sturm.count(-bound, bound);
            std::vector<OpenInterval> cells;
            std::vector<Rational> exact_hits;
            bisect(sturm, f, -bound, bound, total, cells, exact_hits);
            for (auto& cell : cells) {
                cell = tighten(f, cell, Rational(1, 16), exact_hits);
                if (cell.lo == cell.hi) continue;  // collapsed to the point list
                out.push_back({AlgebraicReal(f, cell.lo, cell.hi), mult});
            }
            for (auto& r : exact_hits)
                out.push_back({AlgebraicReal(std::move(r)), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicRoot& a, const AlgebraicRoot& b) {
        return a.value.compare(b.value) < 0;
    });
    return out;
}

RootList isolate_real_roots(const Poly& p, const Rational& width_budget) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    if (!(Rational(0) < width_budget))
        throw std::domain_error("isolate_real_roots: width budget must be positive");
    RootList list;
    list.degree_accounted = p.degree();
    auto roots = real_roots(p);
    // Separate enclosures before shrinking so reported intervals stay disjoint.
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        while (!roots[i].value.is_rational() && !roots[i + 1].value.is_rational() &&
               !(roots[i].value.hi() <= roots[i + 1].value.lo())) {
            roots[i].value.refine_step();
            roots[i + 1].value.refine_step();
        }
        while (!roots[i].value.is_rational() &&
               roots[i + 1].value.is_rational() &&
               !(roots[i].value.hi() <= roots[i + 1].value.rational_value()))
            roots[i].value.refine_step();
        while (!roots[i + 1].value.is_rational() &&
               roots[i].value.is_rational() &&
               !(roots[i].value.rational_value() <= roots[i + 1].value.lo()))
            roots[i + 1].value.refine_step();
    }
    for (auto& r : roots) {
        r.value.refine_below(width_budget);
        IsolationInterval iv;
        iv.multiplicity = r.multiplicity;
        if (r.value.is_rational()) {
            iv.lo = iv.hi = r.value.rational_value();
            iv.kind = IsolationInterval::Point;
        } else {
            iv.lo = r.value.lo();
            iv.hi = r.value.hi();
            iv.kind = IsolationInterval::Open;
        }
        list.intervals.push_back(std::move(iv));
    }
    return list;
}

IsolationInterval refine(const Poly& p, const IsolationInterval& iv,
                         const Rational& width_budget) {
    if (iv.kind == IsolationInterval::Point) return iv;
    Poly f = p.squarefree_part();
    int slo = f.sign_at(iv.lo), shi = f.sign_at(iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::domain_error("refine: interval is not certified for this polynomial");
    AlgebraicReal root(f, iv.lo, iv.hi);
    root.refine_below(width_budget);
    IsolationInterval out = iv;
    if (root.is_rational()) {
        out.lo = out.hi = root.rational_value();
        out.kind = IsolationInterval::Point;
    } else {
        out.lo = root.lo();
        out.hi = root.hi();
    }
    return out;
}

}  // namespace polyzero
