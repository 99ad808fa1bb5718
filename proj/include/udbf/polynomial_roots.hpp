#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "udbf/polynomial.hpp"

// Simultaneous-iteration (Aberth-Ehrlich) root finding for real-coefficient
// polynomials. Polynomial values and derivatives are evaluated with
// compensated Horner: digitized denominators cluster their roots so tightly
// that plain double evaluation noise exceeds |P'| near the roots, which
// strands the iteration orders of magnitude away from the actual roots.

namespace udbf {

inline std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs,
                                                          int max_iterations = 500) {
    if (coeffs.size() < 2) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
    if (coeffs.front() == 0.0) throw std::invalid_argument("polynomial_roots: leading coefficient is zero");

    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> c(coeffs);
    for (auto& x : c) x /= coeffs.front();
    const std::vector<double> dc = poly::derivative(c);
    constexpr double dd_eps = 5e-32;  // compensated-Horner floor, ~2^-104

    // Initial guesses on a staggered spiral around the geometric-mean radius.
    double radius = c.back() != 0.0 ? std::pow(std::fabs(c.back()), 1.0 / n) : 1.0;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    std::vector<bool> frozen(static_cast<std::size_t>(n), false);
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        double r = radius * (n > 1 ? 0.8 + 0.4 * k / (n - 1.0) : 1.0);
        z[static_cast<std::size_t>(k)] = std::polar(r, angle);
    }

    bool converged = false;
    for (int it = 0; it < max_iterations && !converged; ++it) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            if (frozen[static_cast<std::size_t>(k)]) continue;
            std::complex<double> pv = poly::horner_dd(c, zk);
            double scale = poly::magnitude_at(c, std::abs(zk));
            if (std::abs(pv) <= 64.0 * n * dd_eps * scale) {
                frozen[static_cast<std::size_t>(k)] = true;
                continue;
            }
            std::complex<double> dv = poly::horner_dd(dc, zk);
            if (dv == std::complex<double>(0.0, 0.0)) {
                zk *= 1.0 + 1e-6;
                converged = false;
                continue;
            }
            std::complex<double> newton = pv / dv;
            std::complex<double> repulsion{0.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
            std::complex<double> d = 1.0 - newton * repulsion;
            std::complex<double> offset = (d == std::complex<double>(0.0, 0.0)) ? newton : newton / d;
            zk -= offset;
            if (std::abs(offset) > 1e-15 * (1.0 + std::abs(zk))) converged = false;
        }
    }

    for (const auto& zk : z) {
        double resid = std::abs(poly::horner_dd(c, zk));
        double scale = poly::magnitude_at(c, std::abs(zk));
        if (resid > 1e-10 * scale)
            throw std::runtime_error("polynomial_roots: no convergence after " +
                                     std::to_string(max_iterations) + " iterations");
    }
    return z;
}

}  // namespace udbf
