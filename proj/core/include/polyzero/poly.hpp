#ifndef POLYZERO_POLY_HPP
#define POLYZERO_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyzero/rational.hpp"

namespace polyzero {

/// Dense univariate polynomial over Rational.
///
/// Coefficients are stored ascending: coeff(i) multiplies x^i. The leading
/// coefficient is nonzero unless the polynomial is identically zero, in which
/// case the coefficient vector is empty and degree() is -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> ascending);

    /// Builds from coefficients listed highest degree first, e.g.
    /// from_desc({3, 0, -4, 1}) is 3x^3 - 4x + 1.
    static Poly from_desc(std::initializer_list<long> coeffs);
    static Poly from_desc(std::vector<Rational> coeffs);
    static Poly monomial(Rational c, int degree);
    static Poly x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(int i) const;
    const Rational& lead() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    void set_coeff(int i, Rational v);

    Rational operator()(const Rational& x) const;  // exact Horner
    int sign_at(const Rational& x) const { return (*this)(x).sign(); }
    int sign_at(const ExtendedRational& x) const;

    Poly derivative() const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& s) const;
    Poly operator/(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Multiplies by x^k.
    Poly shifted_up(int k) const;

    /// Euclidean division; second component is the remainder.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    /// Quotient when the division is exact, nullopt otherwise.
    std::optional<Poly> divide_exact(const Poly& d) const;

    /// p(x + t)
    Poly taylor_shift(const Rational& t) const;
    /// p(s * x)
    Poly scale_arg(const Rational& s) const;
    /// p(-x)
    Poly reflected() const { return scale_arg(Rational(-1)); }
    /// x^deg * p(1/x)
    Poly reversed() const;

    /// Largest positive rational multiplying the polynomial into primitive
    /// integer form (content of the rational coefficient vector).
    Rational content() const;
    /// Integer-primitive associate with positive leading coefficient.
    Poly primitive() const;
    Poly monic() const;

    /// Greatest common divisor, returned integer-primitive with positive
    /// leading coefficient. gcd(0, q) = primitive(q).
    static Poly gcd(const Poly& a, const Poly& b);

    /// Product over the squarefree factors: same roots, all simple.
    Poly squarefree_part() const;

    /// Yun decomposition: list of (factor, multiplicity) with the factors
    /// squarefree and pairwise coprime; the product of factor^multiplicity
    /// is an associate of *this.
    std::vector<std::pair<Poly, int>> squarefree_decomposition() const;

    /// Multiplicity of x = 0 as a root (index of first nonzero coefficient).
    int order_at_zero() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Polynomial with one coefficient slot replaced by an indeterminate:
/// base(x) + t * x^param_degree, the coefficient t treated as unknown.
struct ParamPoly {
    Poly base;            // must have a zero coefficient at param_degree
    int param_degree = 0;

    /// Substitutes a concrete value for the indeterminate coefficient.
    Poly instantiate(const Rational& t) const;
    bool well_formed() const;
};

}  // namespace polyzero

#endif
