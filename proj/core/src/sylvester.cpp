#include "polyzero/sylvester.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace polyzero {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Works over any integral
// domain with exact division; instantiated for Rational and for Poly (the
// entries being polynomials in the parameter). For integral inputs every
// intermediate value stays integral.
template <typename T>
struct Ops;

template <>
struct Ops<Rational> {
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational one() { return Rational(1); }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational div_exact(const Rational& a, const Rational& b) { return a / b; }
    static Rational neg(const Rational& a) { return -a; }
};

template <>
struct Ops<Poly> {
    static bool is_zero(const Poly& v) { return v.is_zero(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly mul(const Poly& a, const Poly& b) { return a * b; }
    static Poly sub(const Poly& a, const Poly& b) { return a - b; }
    static Poly div_exact(const Poly& a, const Poly& b) {
        auto q = a.divide_exact(b);
        if (!q) throw std::logic_error("Bareiss: inexact division over Poly");
        return *q;
    }
    static Poly neg(const Poly& a) { return -a; }
};

template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
    using O = Ops<T>;
    const size_t n = m.size();
    if (n == 0) return O::one();
    T prev = O::one();
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (O::is_zero(m[k][k])) {
            size_t swap_row = k + 1;
            while (swap_row < n && O::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return T{};  // singular
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = O::sub(O::mul(m[i][j], m[k][k]), O::mul(m[i][k], m[k][j]));
                m[i][j] = O::div_exact(num, prev);
            }
            m[i][k] = T{};
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return negate ? O::neg(det) : det;
}

// Sylvester matrix rows for polynomials given as ascending coefficient
// getters; deg_p, deg_q are the formal degrees used for the block sizes.
template <typename T, typename CoeffFn>
std::vector<std::vector<T>> sylvester_matrix(CoeffFn p_coeff, int deg_p,
                                             CoeffFn q_coeff, int deg_q) {
    const int n = deg_p + deg_q;
    std::vector<std::vector<T>> m(n, std::vector<T>(n));
    for (int row = 0; row < deg_q; ++row)
        for (int i = 0; i <= deg_p; ++i)
            m[row][row + i] = p_coeff(deg_p - i, true);
    for (int row = 0; row < deg_p; ++row)
        for (int i = 0; i <= deg_q; ++i)
            m[deg_q + row][row + i] = q_coeff(deg_q - i, false);
    return m;
}

}  // namespace

Rational resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant: zero polynomial");
    if (p.degree() == 0) return p.lead().pow(q.degree());
    if (q.degree() == 0) return q.lead().pow(p.degree());
    auto coeff = [&](int i, bool from_p) -> Rational {
        return from_p ? p.coeff(i) : q.coeff(i);
    };
    auto m = sylvester_matrix<Rational>(coeff, p.degree(), coeff, q.degree());
    return bareiss_determinant(std::move(m));
}

Rational discriminant(const Poly& p) {
    const int n = p.degree();
    if (n < 2) throw std::domain_error("discriminant: degree must be at least 2");
    Rational res = resultant(p, p.derivative());
    Rational d = res / p.lead();
    return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

ParamDiscriminant discriminant_in_parameter(const ParamPoly& pp) {
    if (!pp.well_formed())
        throw std::domain_error("discriminant_in_parameter: malformed parametric polynomial");
    const int d = pp.param_degree;
    const int n = std::max(pp.base.degree(), d);
    if (n < 2)
        throw std::domain_error("discriminant_in_parameter: degree must be at least 2");

    // Coefficients of p and p' as polynomials in the parameter t.
    auto coeff_p = [&](int i) -> Poly {
        Poly c(pp.base.coeff(i));
        if (i == d) c += Poly::x();
        return c;
    };
    auto coeff = [&](int i, bool from_p) -> Poly {
        if (from_p) return coeff_p(i);
        return coeff_p(i + 1) * Rational(i + 1);
    };
    auto m = sylvester_matrix<Poly>(coeff, n, coeff, n - 1);
    Poly res = bareiss_determinant(std::move(m));

    ParamDiscriminant out;
    const int sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    if (d == n) {
        // Leading coefficient is the parameter itself; divide symbolically.
        if (auto q = res.divide_exact(Poly::x())) {
            out.poly_in_param = sign > 0 ? *q : -*q;
        } else {
            out.poly_in_param = sign > 0 ? res : -res;
            out.extra_param_factor = true;
        }
    } else {
        out.poly_in_param = (sign > 0 ? res : -res) / pp.base.lead();
    }
    return out;
}

}  // namespace polyzero
