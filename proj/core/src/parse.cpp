#include "polyzero/parse.hpp"

#include <cctype>
#include <map>

namespace polyzero {

namespace {

bool looks_like_coeff_list(const std::string& text) {
    for (char ch : text)
        if (std::isalpha(static_cast<unsigned char>(ch))) return false;
    return true;
}

Poly parse_coeff_list(const std::string& text) {
    std::vector<Rational> desc;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i >= n) break;
        size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
            ++i;
        std::string tok = text.substr(start, i - start);
        auto r = Rational::parse(tok);
        if (!r) {
            if (tok.find('/') != std::string::npos && tok.back() == '0' &&
                tok.substr(tok.find('/') + 1).find_first_not_of('0') == std::string::npos)
                throw ParseError("division by zero in literal '" + tok + "'", start);
            throw ParseError("bad coefficient '" + tok + "'", start);
        }
        desc.push_back(std::move(*r));
    }
    if (desc.empty()) throw ParseError("empty input", 0);
    return Poly::from_desc(std::move(desc));
}

// Expression tokenizer/parser: a sum of monomial terms. Each term is an
// optional rational coefficient, an optional '*', an optional variable with
// an optional '^exponent'.
struct ExprParser {
    const std::string& s;
    size_t i = 0;
    char var = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Rational parse_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == '.') {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        std::string intpart = s.substr(start, i - start);
        if (intpart.empty()) throw ParseError("expected a number", start);
        size_t save = i;
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            skip_ws();
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            std::string den = s.substr(dstart, i - dstart);
            if (den.empty()) throw ParseError("expected a denominator after '/'", dstart);
            auto r = Rational::parse(intpart + "/" + den);
            if (!r) throw ParseError("division by zero in literal", dstart);
            return *r;
        }
        i = save;
        auto r = Rational::parse(intpart);
        if (!r) throw ParseError("bad numeric literal", start);
        return *r;
    }

    int parse_exponent() {
        skip_ws();
        size_t start = i;
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
            neg = true;
            ++i;
        }
        size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == dstart) throw ParseError("expected an exponent after '^'", start);
        if (neg) throw ParseError("negative exponents are not polynomial", start);
        long e = std::stol(s.substr(dstart, i - dstart));
        if (e > 64) throw ParseError("exponent too large", dstart);
        return static_cast<int>(e);
    }

    // coefficient [*] [variable [^ exponent]] | variable [^ exponent]
    Poly parse_term() {
        skip_ws();
        size_t term_start = i;
        Rational coeff(1);
        bool have_coeff = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
            coeff = parse_number();
            have_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            if (!have_coeff) throw ParseError("dangling '*'", i);
            ++i;
            skip_ws();
        }
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            char v = s[i];
            if (var == 0)
                var = v;
            else if (var != v)
                throw ParseError(std::string("second variable '") + v + "' (already using '" +
                                     var + "')",
                                 i);
            ++i;
            int exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = parse_exponent();
            }
            return Poly::monomial(coeff, exp);
        }
        if (!have_coeff) throw ParseError("expected a term", term_start);
        return Poly(coeff);
    }

    Poly parse_sum() {
        skip_ws();
        Poly acc;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        while (true) {
            Poly t = parse_term();
            acc += sign < 0 ? -t : t;
            if (eof()) break;
            char op = peek();
            if (op == '+' || op == '-') {
                sign = op == '-' ? -1 : 1;
                ++i;
            } else {
                throw ParseError(std::string("unexpected character '") + op + "'", i);
            }
        }
        return acc;
    }
};

}  // namespace

Poly parse_polynomial(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input", 0);
    Poly p = looks_like_coeff_list(text) ? parse_coeff_list(text)
                                         : ExprParser(text).parse_sum();
    if (p.is_zero()) throw ParseError("zero polynomial", first);
    return p;
}

std::string render_polynomial(const Poly& p) {
    return p.str();
}

}  // namespace polyzero
