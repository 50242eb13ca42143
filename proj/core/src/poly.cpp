#include "polyzero/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polyzero {

namespace {
const Rational kZero{};
}

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
    trim();
}

Poly Poly::from_desc(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return from_desc(std::move(v));
}

Poly Poly::from_desc(std::vector<Rational> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return Poly(std::move(coeffs));
}

Poly Poly::monomial(Rational c, int degree) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rational& Poly::lead() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void Poly::set_coeff(int i, Rational v) {
    if (i >= static_cast<int>(c_.size())) {
        if (v.is_zero()) return;
        c_.resize(i + 1);
    }
    c_[i] = std::move(v);
    trim();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Poly::sign_at(const ExtendedRational& x) const {
    if (is_zero()) return 0;
    switch (x.kind) {
        case ExtendedRational::PosInf:
            return lead().sign();
        case ExtendedRational::NegInf:
            return degree() % 2 == 0 ? lead().sign() : -lead().sign();
        default:
            return sign_at(x.value);
    }
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::operator/(const Rational& s) const {
    if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
    Poly r = *this;
    for (auto& c : r.c_) c /= s;
    return r;
}

Poly Poly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> r(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q, r = *this;
    const Rational& dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.lead() / dl;
        q.set_coeff(k, q.coeff(k) + f);
        r -= (d * f).shifted_up(k);
    }
    return {std::move(q), std::move(r)};
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly Poly::taylor_shift(const Rational& t) const {
    // Horner on p(x + t) viewed coefficient by coefficient.
    Poly acc;
    Poly lin(std::vector<Rational>{t, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::scale_arg(const Rational& s) const {
    Poly r = *this;
    Rational f(1);
    for (size_t i = 1; i < r.c_.size(); ++i) {
        f *= s;
        r.c_[i] *= f;
    }
    r.trim();
    return r;
}

Poly Poly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Rational Poly::content() const {
    if (is_zero()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpz_class(c.num()).get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpz_class(c.den()).get_mpz_t());
    }
    return Rational(mpq_class(num_gcd, den_lcm));
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Poly r = *this / content();
    if (r.lead().sign() < 0) r = -r;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this / lead();
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        Poly r = f.divrem(g).second;
        f = std::move(g);
        g = r.primitive();
    }
    return f.primitive();
}

Poly Poly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("Poly: squarefree part of zero");
    if (degree() == 0) return Poly(Rational(1));
    Poly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive();
    return divide_exact(g).value().primitive();
}

std::vector<std::pair<Poly, int>> Poly::squarefree_decomposition() const {
    if (is_zero()) throw std::domain_error("Poly: squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly f = primitive();
    if (f.degree() == 0) return out;
    // Yun's algorithm.
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f.divide_exact(a).value();
    Poly c = fp.divide_exact(a).value();
    Poly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.primitive(), mult);
        b = b.divide_exact(g).value();
        c = d.divide_exact(g).value();
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

int Poly::order_at_zero() const {
    if (is_zero()) return 0;
    int m = 0;
    while (c_[m].is_zero()) ++m;
    return m;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one() && i > 0;
        if (!unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

Poly ParamPoly::instantiate(const Rational& t) const {
    Poly p = base;
    p.set_coeff(param_degree, p.coeff(param_degree) + t);
    return p;
}

bool ParamPoly::well_formed() const {
    return param_degree >= 0 && base.coeff(param_degree).is_zero();
}

}  // namespace polyzero
