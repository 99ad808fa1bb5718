#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "udbf/damped_binomial.hpp"
#include "udbf/polynomial.hpp"

// Butterworth and standard binomial prototypes used as comparison baselines.

namespace udbf {

enum class FilterKind { Butterworth, StandardBinomial, FivePercentUdb };

inline const char* to_string(FilterKind kind) {
    switch (kind) {
        case FilterKind::Butterworth: return "butterworth";
        case FilterKind::StandardBinomial: return "binomial";
        case FilterKind::FivePercentUdb: return "udb";
    }
    return "?";
}

// Normalized Butterworth denominator from its pole factors,
// theta_k = pi (2k + n - 1) / (2n), then scaled by omega_n^i per position.
inline AnalogPolynomialFilter butterworth_polynomial(int n, double omega_n) {
    validate_order(n);
    validate_cutoff(omega_n);
    std::vector<double> d{1.0};
    if (n % 2 == 1) d = poly::convolve(d, {1.0, 1.0});
    for (int k = 1; k <= n / 2; ++k) {
        double theta = std::numbers::pi * (2.0 * k + n - 1.0) / (2.0 * n);
        d = poly::convolve(d, {1.0, -2.0 * std::cos(theta), 1.0});
    }
    AnalogPolynomialFilter f{n, omega_n, std::move(d)};
    double p = 1.0;
    for (auto& c : f.denom) {
        c *= p;
        p *= omega_n;
    }
    return f;
}

/// Standard binomial prototype (s + omega_n)^n, i.e. uniform damping 1.
inline AnalogPolynomialFilter binomial_polynomial(int n, double omega_n) {
    return polynomial(n, omega_n, 1.0);
}

// One factory for the three families. zeta_override is only meaningful for
// the uniformly-damped kind.
inline AnalogPolynomialFilter design(FilterKind kind, int n, double omega_n,
                                     std::optional<double> zeta_override = std::nullopt) {
    if (zeta_override && kind != FilterKind::FivePercentUdb)
        throw std::invalid_argument("zeta override is only valid for the udb kind");
    switch (kind) {
        case FilterKind::Butterworth: return butterworth_polynomial(n, omega_n);
        case FilterKind::StandardBinomial: return binomial_polynomial(n, omega_n);
        case FilterKind::FivePercentUdb:
            return polynomial(n, omega_n, zeta_override.value_or(damping_constant(n)));
    }
    throw std::invalid_argument("unknown filter kind");
}

inline double design_zeta(FilterKind kind, int n,
                          std::optional<double> zeta_override = std::nullopt) {
    switch (kind) {
        case FilterKind::StandardBinomial: return 1.0;
        case FilterKind::FivePercentUdb: return zeta_override.value_or(damping_constant(n));
        default: return std::nan("");  // Butterworth damping is non-uniform
    }
}

}  // namespace udbf
