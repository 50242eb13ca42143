#ifndef POLYZERO_PARSE_HPP
#define POLYZERO_PARSE_HPP

#include <stdexcept>
#include <string>

#include "polyzero/poly.hpp"

namespace polyzero {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, size_t column)
        : std::runtime_error(std::move(msg)), column(column) {}
    size_t column;  // zero-based offset into the input
};

/// Accepts either a comma/space-separated coefficient list ordered highest
/// degree first ("3, 0, -4, 1", entries rational like "16/3"), or a textual
/// expression in one variable ("3x^3 - 4x + 1") with ^, *, + and -, implicit
/// coefficient 1 and exponent 1, and rational literals. Rejects the zero
/// polynomial. Throws ParseError with the offending column.
Poly parse_polynomial(const std::string& text);

/// Canonical textual rendering that parse_polynomial maps back to p.
std::string render_polynomial(const Poly& p);

}  // namespace polyzero

#endif
