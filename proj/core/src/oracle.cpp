#include "polyzero/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace polyzero {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<double>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double scaled_residual(const std::vector<double>& monic, Complex z) {
    double zb = std::max(1.0, std::abs(z));
    return std::abs(horner(monic, z)) / std::pow(zb, monic.size() - 1);
}

// Aberth sweep set for one squarefree factor given as monic double coeffs.
struct AberthState {
    std::vector<double> coeff;   // monic, ascending
    std::vector<double> dcoeff;  // derivative, ascending
    std::vector<Complex> z;

    explicit AberthState(std::vector<double> monic) : coeff(std::move(monic)) {
        const size_t n = coeff.size() - 1;
        dcoeff.resize(n);
        for (size_t i = 1; i <= n; ++i) dcoeff[i - 1] = coeff[i] * static_cast<double>(i);
        double radius = 1.0;
        for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeff[i]));
        radius += 1.0;
        // Golden-angle spacing with a fixed phase offset breaks the symmetry
        // locks a uniform fan is prone to.
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        z.resize(n);
        for (size_t i = 0; i < n; ++i) {
            double theta = golden * static_cast<double>(i) + 0.35;
            z[i] = radius * Complex(std::cos(theta), std::sin(theta));
        }
    }

    // One simultaneous correction sweep; returns the largest step taken.
    double sweep() {
        const size_t n = z.size();
        double worst = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Complex pv = horner(coeff, z[i]);
            if (pv == 0.0) continue;
            Complex dv = horner(dcoeff, z[i]);
            Complex newton = dv == 0.0 ? Complex(0.0) : pv / dv;
            Complex repulse = 0.0;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex d = z[i] - z[j];
                if (d == 0.0) d = Complex(1e-12, 1e-12);
                repulse += 1.0 / d;
            }
            Complex denom = 1.0 - newton * repulse;
            Complex step = denom == 0.0 ? newton : newton / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        return worst;
    }

    bool converged(double tol) const {
        for (const auto& zi : z)
            if (scaled_residual(coeff, zi) > tol) return false;
        return true;
    }
};

void enforce_conjugate_symmetry(std::vector<Complex>& z, double tol) {
    // Anything within the noise band of the axis is real.
    for (auto& zi : z) {
        double band = std::max(tol * 1e3, 1e-9) * (1.0 + std::abs(zi));
        if (std::abs(zi.imag()) <= band) zi = Complex(zi.real(), 0.0);
    }
    // Pair the rest greedily with their nearest mirror and average.
    std::vector<bool> used(z.size(), false);
    for (size_t i = 0; i < z.size(); ++i) {
        if (used[i] || z[i].imag() == 0.0) continue;
        size_t best = i;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < z.size(); ++j) {
            if (j == i || used[j] || z[j].imag() == 0.0) continue;
            double d = std::abs(z[j] - std::conj(z[i]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == i) continue;
        Complex avg = (z[i] + std::conj(z[best])) / 2.0;
        z[i] = avg;
        z[best] = std::conj(avg);
        used[i] = used[best] = true;
    }
}

}  // namespace

std::vector<NumericRoot> oracle_all_roots(const Poly& p, double tol) {
    if (p.is_zero()) throw std::domain_error("oracle_all_roots: zero polynomial");
    if (tol <= 0) throw std::domain_error("oracle_all_roots: tolerance must be positive");
    std::vector<NumericRoot> out;
    if (p.degree() == 0) return out;

    for (const auto& [factor, mult] : p.squarefree_decomposition()) {
        int zeros = factor.order_at_zero();  // 0 or 1, factor squarefree
        Poly f = zeros > 0 ? factor.divide_exact(Poly::x()).value() : factor;
        for (int k = 0; k < zeros * mult; ++k) out.push_back({0.0, 0.0, 0.0});
        if (f.degree() < 1) continue;

        std::vector<double> monic(f.degree() + 1);
        for (int i = 0; i <= f.degree(); ++i)
            monic[i] = (f.coeff(i) / f.lead()).to_double();
        AberthState state(std::move(monic));

        bool ok = false;
        for (int iter = 0; iter < 200; ++iter) {
            double step = state.sweep();
            if (state.converged(tol) || step < 1e-16) {
                ok = state.converged(tol);
                break;
            }
        }
        enforce_conjugate_symmetry(state.z, tol);
        std::vector<NumericRoot> batch;
        for (const auto& zi : state.z)
            for (int k = 0; k < mult; ++k)
                batch.push_back({zi.real(), zi.imag(), scaled_residual(state.coeff, zi)});
        if (!ok) {
            out.insert(out.end(), batch.begin(), batch.end());
            throw OracleError(std::move(out));
        }
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return out;
}

std::vector<double> oracle_real_roots(const Poly& p, double tol) {
    std::vector<double> out;
    for (const auto& r : oracle_all_roots(p, tol))
        if (r.is_real()) out.push_back(r.re);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polyzero
