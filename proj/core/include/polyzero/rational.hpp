#ifndef POLYZERO_RATIONAL_HPP
#define POLYZERO_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyzero {

/// Exact arbitrary-precision rational scalar.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// All arithmetic is exact, there is no rounding anywhere.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p", "-p", "p/q" or a plain decimal like "1.25" (kept exact).
    static std::optional<Rational> parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inv() const;
    Rational pow(unsigned e) const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Midpoint of two rationals, used all over the bisection code.
    static Rational mid(const Rational& a, const Rational& b) {
        return Rational(mpq_class((a.v_ + b.v_) / 2));
    }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Endpoint of a possibly unbounded interval.
struct ExtendedRational {
    enum Kind { NegInf, Finite, PosInf };
    Kind kind = Finite;
    Rational value;

    static ExtendedRational neg_inf() { return {NegInf, Rational()}; }
    static ExtendedRational pos_inf() { return {PosInf, Rational()}; }
    static ExtendedRational of(Rational r) { return {Finite, std::move(r)}; }

    bool finite() const { return kind == Finite; }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind != Finite || b.kind != Finite)
            return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.value < b.value;
    }
    std::string str() const;
};

}  // namespace polyzero

#endif
