#ifndef POLYZERO_ORACLE_HPP
#define POLYZERO_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "polyzero/poly.hpp"

namespace polyzero {

/// One numerically computed root. `residual` is the backward-relative value
/// |p(z)| / max(1, |z|)^n of the monic-normalized polynomial.
struct NumericRoot {
    double re = 0.0;
    double im = 0.0;
    double residual = 0.0;

    bool is_real() const { return im == 0.0; }
};

struct OracleError : std::runtime_error {
    explicit OracleError(std::vector<NumericRoot> best)
        : std::runtime_error("oracle_all_roots: did not converge"),
          best_iterate(std::move(best)) {}
    std::vector<NumericRoot> best_iterate;
};

/// All complex roots of p by simultaneous (Aberth) iteration started from a
/// perturbed circle of radius 1 + max|a_i/a_n| with golden-angle spacing.
/// Deterministic and seed-free. Multiple roots are deflated exactly first, so
/// the iteration only ever sees simple roots; each root is repeated according
/// to its multiplicity in the output. Conjugate symmetry is enforced.
/// Roots are sorted by real part, then imaginary part.
/// Throws OracleError (carrying the best iterate) after 200 stalled sweeps.
std::vector<NumericRoot> oracle_all_roots(const Poly& p, double tol = 1e-10);

/// The real roots reported by the oracle, ascending, multiplicity-repeated.
std::vector<double> oracle_real_roots(const Poly& p, double tol = 1e-10);

}  // namespace polyzero

#endif
