#include "polyzero/lowdegree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polyzero/isolate.hpp"
#include "polyzero/sturm.hpp"
#include "polyzero/sylvester.hpp"

namespace polyzero {

namespace {

std::string octant_str(int sa, int sb, int sc) {
    auto s = [](int v) { return v > 0 ? "+" : v < 0 ? "-" : "0"; };
    std::ostringstream os;
    os << "(" << s(sa) << "," << s(sb) << "," << s(sc) << ")";
    return os.str();
}

std::vector<AlgebraicReal> sorted_roots(const Poly& q) {
    std::vector<AlgebraicReal> out;
    if (q.is_zero() || q.degree() < 1) return out;
    for (auto& r : real_roots(q)) out.push_back(std::move(r.value));
    return out;
}

/// The single real root of a*x^3 + 1 (a != 0).
AlgebraicReal cube_anchor(const Rational& a) {
    Poly q(std::vector<Rational>{Rational(1), Rational(0), Rational(0), a});
    auto roots = sorted_roots(q);
    return roots.front();
}

ReportInterval open_cell(ReportBound lo, ReportBound hi, int count) {
    ReportInterval iv;
    iv.lo = std::move(lo);
    iv.hi = std::move(hi);
    iv.candidates = CountSet::exactly(count);
    return iv;
}

ReportInterval point_cell(AlgebraicReal at, int mult, std::string label = {}) {
    ReportInterval iv;
    iv.point = true;
    iv.multiplicity = mult;
    iv.candidates = CountSet::exactly(mult);
    iv.lo = ReportBound::at(at, label);
    iv.hi = ReportBound::at(std::move(at), std::move(label));
    return iv;
}

ReportBound origin_bound() { return ReportBound::at(AlgebraicReal(Rational(0)), "0"); }

// Derives the totals from exact interval cells: every cell in the low-degree
// verdicts is sign-definite (never straddles the origin).
void finalize_counts(RootCountReport& rep) {
    int pos = 0, neg = 0, total = 0;
    for (const auto& iv : rep.intervals) {
        int n = iv.point ? iv.multiplicity : iv.candidates.exact_value();
        total += n;
        int side;
        if (iv.point)
            side = iv.lo.value.sign();
        else if (iv.hi.finite() && iv.hi.value.sign() <= 0)
            side = -1;
        else
            side = 1;
        (side < 0 ? neg : pos) += n;
    }
    rep.positive = CountSet::exactly(pos);
    rep.negative = CountSet::exactly(neg);
    rep.complex_pairs = CountSet::exactly((rep.degree - rep.zero_multiplicity - total) / 2);
}

// Exact rational location of the unique multiple root when the discriminant
// vanishes (the gcd of p and p' is linear, or the root is triple).
Rational multiple_root_location(const Poly& p) {
    Poly g = Poly::gcd(p, p.derivative());
    if (g.degree() == 1) return -g.coeff(0) / g.coeff(1);
    // Triple root of a cubic: the gcd is (x - r)^2.
    return -g.coeff(1) / (g.coeff(2) * Rational(2));
}

std::vector<TangencyData> cubic_tangencies(const Rational& b, const Rational& c) {
    std::vector<TangencyData> pairs;
    // Discriminant in the leading coefficient t (a quadratic in t) and the
    // contact equation b*x^2 + 2c*x + 3 = 0 carry the tangency pairs.
    Poly dpoly(std::vector<Rational>{b * b * (c * c - Rational(4) * b),
                                     Rational(2) * c * (Rational(9) * b - Rational(2) * c * c),
                                     Rational(-27)});
    Poly chipoly(std::vector<Rational>{Rational(3), Rational(2) * c, b});
    auto alphas = sorted_roots(dpoly);
    auto chis = sorted_roots(chipoly);
    if (alphas.empty() || chis.empty()) return pairs;

    for (auto& chi : chis) {
        // t = alpha(chi) = -(2b*chi + c)/(3*chi^2) solves the slope-matching
        // condition; chi != 0 always since the curves meet the axis at 1.
        while (!chi.is_rational() && chi.lo().sign() != chi.hi().sign()) chi.refine_step();
        auto image = [&]() -> std::pair<Rational, Rational> {
            Rational l = chi.is_rational() ? chi.rational_value() : chi.lo();
            Rational h = chi.is_rational() ? chi.rational_value() : chi.hi();
            Rational n1 = -(Rational(2) * b * l + c), n2 = -(Rational(2) * b * h + c);
            if (n1 > n2) std::swap(n1, n2);
            Rational d1 = Rational(3) * l * l, d2 = Rational(3) * h * h;
            if (d1 > d2) std::swap(d1, d2);
            Rational cands[4] = {n1 / d1, n1 / d2, n2 / d1, n2 / d2};
            Rational lo = cands[0], hi = cands[0];
            for (auto& v : cands) {
                if (v < lo) lo = v;
                if (hi < v) hi = v;
            }
            return {lo, hi};
        };
        for (int rounds = 0; rounds < 256; ++rounds) {
            auto [ilo, ihi] = image();
            int hits = 0;
            const AlgebraicReal* hit = nullptr;
            for (const auto& alpha : alphas) {
                Rational alo = alpha.is_rational() ? alpha.rational_value() : alpha.lo();
                Rational ahi = alpha.is_rational() ? alpha.rational_value() : alpha.hi();
                if (!(ahi < ilo || ihi < alo)) {
                    ++hits;
                    hit = &alpha;
                }
            }
            if (hits == 1) {
                pairs.push_back({*hit, chi, 2});
                break;
            }
            if (hits <= 1 && alphas.size() == 1) {
                // Coalesced critical values: both loci pair with the one root.
                pairs.push_back({alphas.front(), chi, 2});
                break;
            }
            chi.refine_step();
            for (auto& alpha : alphas) alpha.refine_step();
        }
    }
    // alpha == 0 never defines a cubic; drop such pairs.
    std::erase_if(pairs, [](const TangencyData& t) { return t.alpha.compare(Rational(0)) == 0; });
    std::sort(pairs.begin(), pairs.end(), [](const TangencyData& x, const TangencyData& y) {
        return y.alpha < x.alpha;
    });
    return pairs;
}

// Position of a among the real roots of the discriminant-in-leading-
// coefficient quadratic: the exact discriminant sign at a plus how many
// critical values lie strictly above a.
struct AlphaPosition {
    int disc_sign = 0;
    int alphas_above = 0;
};

AlphaPosition alpha_position(const Rational& a, const Rational& b, const Rational& c) {
    Poly dpoly(std::vector<Rational>{b * b * (c * c - Rational(4) * b),
                                     Rational(2) * c * (Rational(9) * b - Rational(2) * c * c),
                                     Rational(-27)});
    AlphaPosition pos;
    pos.disc_sign = dpoly.sign_at(a);
    pos.alphas_above = sturm_count(dpoly, ExtendedRational::of(a), ExtendedRational::pos_inf());
    return pos;
}

const AlgebraicReal* pick_sign(const std::vector<AlgebraicReal>& xs, int sign, bool largest) {
    const AlgebraicReal* best = nullptr;
    for (const auto& x : xs) {
        if (x.sign() != sign) continue;
        if (!best || (largest ? (*best < x) : (x < *best))) best = &x;
    }
    return best;
}

}  // namespace

std::string CubicCaseTag::str() const {
    std::ostringstream os;
    os << "octant " << octant_str(sign_a, sign_b, sign_c);
    switch (threshold) {
        case C2Ge4b: os << ", c^2 > 4b"; break;
        case C2Eq4b: os << ", c^2 = 4b"; break;
        case C2Between3b4b: os << ", 3b < c^2 < 4b"; break;
        case C2Eq3b: os << ", c^2 = 3b"; break;
        case C2Lt3b: os << ", c^2 < 3b"; break;
        default: break;
    }
    switch (position) {
        case Left: os << ", -c/b left of -(1/a)^(1/3)"; break;
        case Equal: os << ", -c/b = -(1/a)^(1/3)"; break;
        case Right: os << ", -c/b right of -(1/a)^(1/3)"; break;
        default: break;
    }
    if (!detail.empty()) os << " [" << detail << "]";
    return os.str();
}

RootCountReport classify_linear(const Rational& a) {
    if (a.is_zero()) throw std::domain_error("classify_linear: a must be nonzero");
    RootCountReport rep;
    rep.degree = 1;
    Rational root = -a.inv();
    rep.intervals.push_back(point_cell(AlgebraicReal(root), 1, "-1/a"));
    rep.deduce("line a*x + 1 always meets the axis at -1/a = " + root.str() +
               (a.sign() < 0 ? " (positive since a < 0)" : " (negative since a > 0)"));
    finalize_counts(rep);
    return rep;
}

RootCountReport classify_quadratic(const Rational& a, const Rational& b) {
    if (a.is_zero()) throw std::domain_error("classify_quadratic: a must be nonzero");
    RootCountReport rep;
    rep.degree = 2;
    Rational disc = b * b - Rational(4) * a;

    if (a.sign() > 0) {
        if (disc.sign() < 0) {
            rep.deduce("b^2 - 4a = " + disc.str() +
                       " < 0: the curves never meet, no real roots");
            finalize_counts(rep);
            return rep;
        }
        if (disc.sign() == 0) {
            Rational root = -b / (Rational(2) * a);
            rep.intervals.push_back(point_cell(AlgebraicReal(root), 2, "-b/2a"));
            rep.deduce("b^2 = 4a: the curves are tangent, double root at -b/(2a) = " +
                       root.str());
            finalize_counts(rep);
            return rep;
        }
        // Two real roots of one sign, split by a root of a x^2 - 1.
        Poly anchor_poly(std::vector<Rational>{Rational(-1), Rational(0), a});
        auto anchors = sorted_roots(anchor_poly);
        if (b.sign() < 0) {
            const AlgebraicReal& s = anchors[1];
            rep.intervals.push_back(open_cell(origin_bound(), ReportBound::at(s, "1/sqrt(a)"), 1));
            rep.intervals.push_back(
                open_cell(ReportBound::at(s, "1/sqrt(a)"), ReportBound::pos_inf(), 1));
            rep.deduce("b < -2*sqrt(a): two positive roots split by 1/sqrt(a)");
        } else {
            const AlgebraicReal& s = anchors[0];
            rep.intervals.push_back(
                open_cell(ReportBound::neg_inf(), ReportBound::at(s, "-1/sqrt(a)"), 1));
            rep.intervals.push_back(open_cell(ReportBound::at(s, "-1/sqrt(a)"), origin_bound(), 1));
            rep.deduce("b > 2*sqrt(a): two negative roots split by -1/sqrt(a)");
        }
        finalize_counts(rep);
        return rep;
    }

    // a < 0: one positive and one negative root, positioned against the roots
    // +-1/sqrt(-a) of the suppressed equation a x^2 + 1 = 0.
    Poly anchor_poly(std::vector<Rational>{Rational(1), Rational(0), a});
    auto anchors = sorted_roots(anchor_poly);
    const AlgebraicReal& neg_s = anchors[0];
    const AlgebraicReal& pos_s = anchors[1];
    if (b.is_zero()) {
        rep.intervals.push_back(point_cell(neg_s, 1, "-1/sqrt(-a)"));
        rep.intervals.push_back(point_cell(pos_s, 1, "1/sqrt(-a)"));
        rep.deduce("b = 0: the roots are exactly those of the suppressed equation, "
                   "+-1/sqrt(-a)");
    } else if (b.sign() < 0) {
        rep.intervals.push_back(
            open_cell(ReportBound::neg_inf(), ReportBound::at(neg_s, "-1/sqrt(-a)"), 1));
        rep.intervals.push_back(open_cell(origin_bound(), ReportBound::at(pos_s, "1/sqrt(-a)"), 1));
        rep.deduce("a < 0, b < 0: bigger root in (0, 1/sqrt(-a)), smaller below -1/sqrt(-a)");
    } else {
        rep.intervals.push_back(open_cell(ReportBound::at(neg_s, "-1/sqrt(-a)"), origin_bound(), 1));
        rep.intervals.push_back(
            open_cell(ReportBound::at(pos_s, "1/sqrt(-a)"), ReportBound::pos_inf(), 1));
        rep.deduce("a < 0, b > 0: smaller root in (-1/sqrt(-a), 0), bigger above 1/sqrt(-a)");
    }
    finalize_counts(rep);
    return rep;
}

RootCountReport classify_depressed_cubic(const Rational& a, const Rational& c) {
    if (a.is_zero()) throw std::domain_error("classify_depressed_cubic: a must be nonzero");
    RootCountReport rep;
    rep.degree = 3;

    if (c.is_zero()) {
        AlgebraicReal xi = cube_anchor(a);
        rep.intervals.push_back(point_cell(xi, 1, "-(1/a)^(1/3)"));
        rep.deduce("pure cube a*x^3 + 1: single real root at -(1/a)^(1/3), two complex roots");
        finalize_counts(rep);
        return rep;
    }
    if (a.sign() < 0) {
        RootCountReport rep2 = mirrored(classify_depressed_cubic(-a, -c));
        rep2.deduce("analyzed as the reflection x -> -x of " + (-a).str() + "*x^3 + " +
                    (-c).str() + "*x + 1 = 0");
        return rep2;
    }

    AlgebraicReal xi = cube_anchor(a);  // negative since a > 0
    Rational alpha_star = Rational(-4) * c * c * c / Rational(27);
    rep.deduce("critical leading coefficient alpha* = -4c^3/27 = " + alpha_star.str());

    if (c.sign() > 0) {
        rep.intervals.push_back(open_cell(ReportBound::at(xi, "-(1/a)^(1/3)"), origin_bound(), 1));
        rep.deduce("a > 0, c > 0: one negative root between -(1/a)^(1/3) and 0, two complex "
                   "roots (alpha* < 0 is out of reach for a > 0)");
        finalize_counts(rep);
        return rep;
    }

    // a > 0, c < 0: compare a against alpha* > 0.
    Rational chi = Rational(-3) / (Rational(2) * c);
    Rational chi0 = Rational(3) / c;
    rep.deduce("tangency locus chi = -3/(2c) = " + chi.str());
    if (a > alpha_star) {
        rep.intervals.push_back(
            open_cell(ReportBound::neg_inf(), ReportBound::at(xi, "-(1/a)^(1/3)"), 1));
        rep.deduce("a > alpha*: the cubic outruns the line, one negative root below "
                   "-(1/a)^(1/3) and two complex roots");
    } else if (a == alpha_star) {
        rep.intervals.push_back(point_cell(AlgebraicReal(chi0), 1, "3/c"));
        rep.intervals.push_back(point_cell(AlgebraicReal(chi), 2, "-3/(2c)"));
        rep.deduce("a = alpha*: tangency met exactly, double root at chi = " + chi.str() +
                   " and simple root at 3/c = " + chi0.str());
    } else {
        rep.intervals.push_back(
            open_cell(ReportBound::neg_inf(), ReportBound::at(xi, "-(1/a)^(1/3)"), 1));
        rep.intervals.push_back(
            open_cell(origin_bound(), ReportBound::at(AlgebraicReal(chi), "-3/(2c)"), 1));
        rep.intervals.push_back(
            open_cell(ReportBound::at(AlgebraicReal(chi), "-3/(2c)"), ReportBound::pos_inf(), 1));
        rep.deduce("a < alpha*: two positive roots split by chi = " + chi.str() +
                   ", one negative root below -(1/a)^(1/3)");
    }
    finalize_counts(rep);
    return rep;
}

CubicClassification classify_cubic(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero()) throw std::domain_error("classify_cubic: a must be nonzero");

    CubicClassification cl;
    cl.case_tag.sign_a = a.sign();
    cl.case_tag.sign_b = b.sign();
    cl.case_tag.sign_c = c.sign();

    if (b.is_zero()) {
        cl.case_tag.detail = "depressed form";
        cl.verdict = classify_depressed_cubic(a, c);
        if (!c.is_zero()) {
            Rational alpha_star = Rational(-4) * c * c * c / Rational(27);
            cl.tangencies.push_back({AlgebraicReal(alpha_star),
                                     AlgebraicReal(Rational(-3) / (Rational(2) * c)), 2});
            cl.sigma_points.push_back(AlgebraicReal(-c.inv()));  // -c x = 1
        }
        return cl;
    }

    if (a.sign() < 0) {
        CubicClassification inner = classify_cubic(-a, b, -c);
        cl.case_tag.threshold = inner.case_tag.threshold;
        cl.case_tag.position = inner.case_tag.position;
        cl.case_tag.detail = "via reflection x -> -x";
        cl.verdict = mirrored(inner.verdict);
        cl.verdict.deduce("analyzed as the reflection x -> -x of the mirrored equation");
        for (auto& t : inner.tangencies)
            cl.tangencies.push_back({-t.alpha, -t.chi, t.chi_multiplicity});
        for (auto& s : inner.sigma_points) cl.sigma_points.push_back(-s);
        std::sort(cl.sigma_points.begin(), cl.sigma_points.end());
        return cl;
    }

    // a > 0, b != 0 from here on.
    Poly p(std::vector<Rational>{Rational(1), c, b, a});
    RootCountReport rep;
    rep.degree = 3;
    AlgebraicReal xi = cube_anchor(a);
    Rational rroot = -c / b;  // nonzero root of -b x^2 - c x
    Poly sigma_poly(std::vector<Rational>{Rational(1), c, b});
    cl.sigma_points = sorted_roots(sigma_poly);
    cl.tangencies = cubic_tangencies(b, c);

    Rational c2 = c * c, b3 = Rational(3) * b, b4 = Rational(4) * b;
    cl.case_tag.threshold = c2 > b4    ? CubicCaseTag::C2Ge4b
                            : c2 == b4 ? CubicCaseTag::C2Eq4b
                            : c2 > b3  ? CubicCaseTag::C2Between3b4b
                            : c2 == b3 ? CubicCaseTag::C2Eq3b
                                       : CubicCaseTag::C2Lt3b;
    const bool ge4b = cl.case_tag.threshold == CubicCaseTag::C2Ge4b ||
                      cl.case_tag.threshold == CubicCaseTag::C2Eq4b;
    const bool between = cl.case_tag.threshold == CubicCaseTag::C2Between3b4b ||
                         cl.case_tag.threshold == CubicCaseTag::C2Eq3b;
    AlphaPosition apos = alpha_position(a, b, c);
    {
        std::ostringstream os;
        os << "discriminant sign at the given leading coefficient: " << apos.disc_sign << "; "
           << apos.alphas_above << " critical value(s) above it";
        rep.deduce(os.str());
    }

    auto xi_bound = [&]() { return ReportBound::at(xi, "-(1/a)^(1/3)"); };
    auto chi_bound = [&](const AlgebraicReal& x, const char* name = "chi") {
        return ReportBound::at(x, name);
    };
    auto sg_bound = [&](const AlgebraicReal& x, const char* name = "sigma") {
        return ReportBound::at(x, name);
    };
    auto rr_bound = [&]() { return ReportBound::at(AlgebraicReal(rroot), "-c/b"); };

    if (b.sign() > 0 && c.sign() >= 0) {
        // The all-positive octant (c = 0 joins it; its position test always
        // lands right of the cube anchor). Everything happens left of 0.
        Rational postest = a * c * c * c - b * b * b;
        cl.case_tag.position = postest.sign() > 0   ? CubicCaseTag::Left
                               : postest.sign() < 0 ? CubicCaseTag::Right
                                                    : CubicCaseTag::Equal;
        if (cl.case_tag.position == CubicCaseTag::Left) {
            if (ge4b) {
                const AlgebraicReal& chi = cl.tangencies.front().chi;  // negative locus
                const AlgebraicReal* sigma = pick_sign(cl.sigma_points, -1, true);
                if (apos.disc_sign > 0) {
                    rep.intervals.push_back(open_cell(ReportBound::neg_inf(), chi_bound(chi), 1));
                    rep.intervals.push_back(open_cell(chi_bound(chi), rr_bound(), 1));
                    rep.intervals.push_back(open_cell(sg_bound(*sigma), origin_bound(), 1));
                    rep.deduce("a below the relevant critical value: three negative roots "
                               "split by chi and -c/b, the last between sigma and 0");
                } else if (apos.disc_sign == 0) {
                    Rational dbl = multiple_root_location(p);
                    rep.intervals.push_back(point_cell(AlgebraicReal(dbl), 2, "chi"));
                    rep.intervals.push_back(open_cell(sg_bound(*sigma), origin_bound(), 1));
                    rep.deduce("a equals the critical value: double root at chi = " + dbl.str());
                } else {
                    rep.intervals.push_back(open_cell(sg_bound(*sigma), origin_bound(), 1));
                    rep.deduce("a above the critical value: the tangency pair has dissolved "
                               "into complex roots, one negative root between sigma and 0");
                }
            } else if (between) {
                if (apos.disc_sign > 0) {
                    const AlgebraicReal& chi1 = cl.tangencies.front().chi;
                    rep.intervals.push_back(open_cell(ReportBound::neg_inf(), chi_bound(chi1, "chi_1"), 1));
                    rep.intervals.push_back(open_cell(chi_bound(chi1, "chi_1"), rr_bound(), 1));
                    rep.intervals.push_back(open_cell(xi_bound(), origin_bound(), 1));
                    rep.deduce("a between the critical values: three negative roots, the "
                               "last between -(1/a)^(1/3) and 0");
                } else if (apos.disc_sign == 0) {
                    Rational dbl = multiple_root_location(p);
                    rep.intervals.push_back(point_cell(AlgebraicReal(dbl), 2, "chi_1"));
                    rep.intervals.push_back(open_cell(xi_bound(), origin_bound(), 1));
                    rep.deduce("a equals the upper critical value: double root at " + dbl.str());
                } else {
                    rep.intervals.push_back(open_cell(xi_bound(), origin_bound(), 1));
                    rep.deduce("a above the upper critical value: one negative root between "
                               "-(1/a)^(1/3) and 0, two complex roots");
                }
            } else {
                rep.intervals.push_back(open_cell(xi_bound(), origin_bound(), 1));
                rep.deduce("c^2 < 3b: no real tangency exists, one negative root between "
                           "-(1/a)^(1/3) and 0, two complex roots");
            }
        } else if (cl.case_tag.position == CubicCaseTag::Right) {
            if (ge4b && c.sign() > 0) {
                const AlgebraicReal* s_small = pick_sign(cl.sigma_points, -1, false);
                const AlgebraicReal* s_big = pick_sign(cl.sigma_points, -1, true);
                rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                rep.intervals.push_back(
                    open_cell(rr_bound(), sg_bound(*s_small, "sigma_2"), 1));
                rep.intervals.push_back(open_cell(sg_bound(*s_big, "sigma_1"), origin_bound(), 1));
                rep.deduce("-c/b right of -(1/a)^(1/3) with c^2 >= 4b: three negative roots; "
                           "no tangency can occur here");
            } else if (between) {
                if (apos.disc_sign > 0) {
                    const AlgebraicReal& chi1 = cl.tangencies.front().chi;
                    const AlgebraicReal& chi2 = cl.tangencies.back().chi;
                    rep.intervals.push_back(open_cell(ReportBound::neg_inf(), chi_bound(chi1, "chi_1"), 1));
                    rep.intervals.push_back(
                        open_cell(chi_bound(chi1, "chi_1"), chi_bound(chi2, "chi_2"), 1));
                    rep.intervals.push_back(open_cell(chi_bound(chi2, "chi_2"), origin_bound(), 1));
                    rep.deduce("a between the critical values: three negative roots split by "
                               "the two tangency loci");
                } else if (apos.disc_sign == 0) {
                    Rational dbl = multiple_root_location(p);
                    rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                    rep.intervals.push_back(point_cell(AlgebraicReal(dbl), 2, "chi_2"));
                    rep.deduce("a equals the lower critical value: double root at " + dbl.str());
                } else {
                    rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                    rep.deduce("a below both critical values: one negative root below "
                               "-(1/a)^(1/3), two complex roots");
                }
            } else {
                rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                rep.deduce("c^2 < 3b: no real tangency exists, one negative root below "
                           "-(1/a)^(1/3), two complex roots");
            }
        } else {
            // -c/b = -(1/a)^(1/3) exactly, so -c/b is itself a root.
            if (cl.case_tag.threshold == CubicCaseTag::C2Lt3b) {
                rep.intervals.push_back(point_cell(AlgebraicReal(rroot), 1, "-c/b"));
                rep.deduce("boundary position with c^2 < 3b: the negative root is exactly "
                           "-c/b = " + rroot.str() + ", two complex roots");
            } else if (cl.case_tag.threshold == CubicCaseTag::C2Eq3b) {
                Rational triple = Rational(-3) / c;
                rep.intervals.push_back(point_cell(AlgebraicReal(triple), 3, "-3/c"));
                rep.deduce("a = c^3/27 with b = c^2/3: triple root at -3/c = " + triple.str());
            } else {
                rep.intervals.push_back(open_cell(ReportBound::neg_inf(), rr_bound(), 1));
                rep.intervals.push_back(point_cell(AlgebraicReal(rroot), 1, "-c/b"));
                rep.intervals.push_back(open_cell(rr_bound(), origin_bound(), 1));
                rep.deduce("boundary position with c^2 > 3b: three negative roots, the middle "
                           "one exactly -c/b = " + rroot.str());
            }
        }
    } else if (b.sign() > 0) {
        // b > 0, c < 0: positive roots appear only through the positive
        // critical value, which exists once c^2 > 4b.
        if (cl.case_tag.threshold == CubicCaseTag::C2Ge4b) {
            const AlgebraicReal& chi = cl.tangencies.front().chi;  // pairs alpha_1 > 0
            const AlgebraicReal* s_small = pick_sign(cl.sigma_points, 1, false);
            const AlgebraicReal* s_big = pick_sign(cl.sigma_points, 1, true);
            if (apos.disc_sign > 0 && apos.alphas_above >= 1) {
                rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                rep.intervals.push_back(
                    open_cell(sg_bound(*s_small, "sigma_2"), chi_bound(chi), 1));
                rep.intervals.push_back(open_cell(chi_bound(chi), sg_bound(*s_big, "sigma_1"), 1));
                rep.deduce("a below the positive critical value: two positive roots split by "
                           "chi inside (sigma_2, sigma_1), one negative root below "
                           "-(1/a)^(1/3)");
            } else if (apos.disc_sign == 0 && apos.alphas_above == 0) {
                Rational dbl = multiple_root_location(p);
                rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                rep.intervals.push_back(point_cell(AlgebraicReal(dbl), 2, "chi"));
                rep.deduce("a equals the positive critical value: positive double root at " +
                           dbl.str());
            } else {
                rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
                rep.deduce("a above the positive critical value: one negative root below "
                           "-(1/a)^(1/3), two complex roots");
            }
        } else {
            rep.intervals.push_back(open_cell(ReportBound::neg_inf(), xi_bound(), 1));
            rep.deduce("c^2 <= 4b with c < 0: no reachable tangency, one negative root below "
                       "-(1/a)^(1/3), two complex roots");
        }
    } else {
        // b < 0: critical values always real with opposite signs; the
        // relevant one is positive, as is its tangency locus.
        const AlgebraicReal& chi = cl.tangencies.front().chi;
        const AlgebraicReal* s_big = pick_sign(cl.sigma_points, 1, true);
        ReportInterval negcell;
        if (c.sign() >= 0) {
            negcell = open_cell(xi_bound(), origin_bound(), 1);
            rep.deduce("one negative root between -(1/a)^(1/3) and 0 in every sub-case");
        } else {
            Rational postest = a * c * c * c - b * b * b;
            if (postest.sign() == 0) {
                negcell = point_cell(AlgebraicReal(rroot), 1, "-c/b");
                rep.deduce("-c/b meets -(1/a)^(1/3): the negative root is exactly " +
                           rroot.str());
            } else if (postest.sign() < 0) {
                negcell = open_cell(rr_bound(), xi_bound(), 1);
                rep.deduce("one negative root between -c/b and -(1/a)^(1/3)");
            } else {
                negcell = open_cell(xi_bound(), rr_bound(), 1);
                rep.deduce("one negative root between -(1/a)^(1/3) and -c/b");
            }
        }
        rep.intervals.push_back(std::move(negcell));
        if (apos.disc_sign > 0 && apos.alphas_above >= 1) {
            rep.intervals.push_back(open_cell(sg_bound(*s_big, "sigma_1"), chi_bound(chi), 1));
            rep.intervals.push_back(open_cell(chi_bound(chi), ReportBound::pos_inf(), 1));
            rep.deduce("a below the positive critical value: one positive root between "
                       "sigma_1 and chi, another above chi");
        } else if (apos.disc_sign == 0 && apos.alphas_above == 0) {
            Rational dbl = multiple_root_location(p);
            rep.intervals.push_back(point_cell(AlgebraicReal(dbl), 2, "chi"));
            rep.deduce("a equals the positive critical value: positive double root at " +
                       dbl.str());
        } else {
            rep.deduce("a above the positive critical value: two complex roots besides the "
                       "negative one");
        }
    }

    finalize_counts(rep);
    rep.deductions.insert(rep.deductions.begin(), "cubic case: " + cl.case_tag.str());
    cl.verdict = std::move(rep);
    return cl;
}

}  // namespace polyzero
