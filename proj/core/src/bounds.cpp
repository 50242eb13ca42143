#include "polyzero/bounds.hpp"

#include <stdexcept>

namespace polyzero {

int sign_variations(const Poly& p) {
    int count = 0, prev = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        int s = p.coeff(i).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

namespace {
std::vector<int> candidate_set(int variations) {
    std::vector<int> out;
    for (int v = variations; v >= 0; v -= 2) out.push_back(v);
    return out;
}
}  // namespace

SignRuleResult descartes(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("descartes: zero polynomial");
    Poly q = p;
    int m = q.order_at_zero();
    if (m > 0) q = q.divide_exact(Poly::monomial(Rational(1), m)).value();
    SignRuleResult r;
    r.positive_candidates = candidate_set(sign_variations(q));
    r.negative_candidates = candidate_set(sign_variations(q.reflected()));
    return r;
}

BulkBound lagrange_bound(const Poly& p) {
    if (p.degree() < 1) throw std::domain_error("lagrange_bound: constant polynomial");
    Rational sum;
    for (int i = 0; i < p.degree(); ++i) sum += (p.coeff(i) / p.lead()).abs();
    return {sum < Rational(1) ? Rational(1) : sum, BulkBound::Lagrange};
}

BulkBound cauchy_bound(const Poly& p) {
    if (p.degree() < 1) throw std::domain_error("cauchy_bound: constant polynomial");
    Rational best;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = (p.coeff(i) / p.lead()).abs();
        if (a > best) best = a;
    }
    return {Rational(1) + best, BulkBound::Cauchy};
}

Poly mobius_shift(const Poly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::domain_error("mobius_shift: need a < b");
    if (p.is_zero()) throw std::domain_error("mobius_shift: zero polynomial");
    const int n = p.degree();
    // sum_i c_i (a x + b)^i (1 + x)^(n-i)
    Poly num(std::vector<Rational>{b, a});
    Poly den(std::vector<Rational>{Rational(1), Rational(1)});
    Poly result;
    Poly num_pow(Rational(1));
    std::vector<Poly> den_pows(n + 1);
    den_pows[0] = Poly(Rational(1));
    for (int i = 1; i <= n; ++i) den_pows[i] = den_pows[i - 1] * den;
    for (int i = 0; i <= n; ++i) {
        if (!p.coeff(i).is_zero()) result += num_pow * den_pows[n - i] * p.coeff(i);
        if (i < n) num_pow *= num;
    }
    return result;
}

}  // namespace polyzero
