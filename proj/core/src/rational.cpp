#include "polyzero/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace polyzero {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(std::move(r));
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto slash = s.find('/');
    auto dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(std::move(q));
        }
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            size_t frac_len = s.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
            mpz_class num(digits), den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(std::move(q));
        }
        return Rational(mpq_class(mpz_class(s)));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::string ExtendedRational::str() const {
    switch (kind) {
        case NegInf: return "-inf";
        case PosInf: return "inf";
        default: return value.str();
    }
}

}  // namespace polyzero
