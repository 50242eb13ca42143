#ifndef POLYZERO_SYLVESTER_HPP
#define POLYZERO_SYLVESTER_HPP

#include "polyzero/poly.hpp"

namespace polyzero {

/// Determinant of the Sylvester matrix of p and q. Zero exactly when p and q
/// share a complex root. Throws on zero input.
Rational resultant(const Poly& p, const Poly& q);

/// Discriminant with the normalization (-1)^(n(n-1)/2) * Res(p, p') / lead(p).
/// Zero exactly when p has a repeated complex root. Requires degree >= 2.
Rational discriminant(const Poly& p);

/// Result of a symbolic discriminant computation in the indeterminate
/// coefficient. `extra_param_factor` is set when the division by the leading
/// coefficient could not be carried out exactly (the returned polynomial then
/// still contains that factor).
struct ParamDiscriminant {
    Poly poly_in_param;
    bool extra_param_factor = false;
};

/// Discriminant of base(x) + t*x^d as a polynomial in t.
///
/// When d equals the top degree, the leading coefficient is t itself and the
/// division Res/lead is performed as exact polynomial division (it divides for
/// every classical discriminant). For the d = top case the value at t = 0 is
/// meaningless and a t = 0 root of the result must be discarded by callers.
ParamDiscriminant discriminant_in_parameter(const ParamPoly& pp);

}  // namespace polyzero

#endif
