#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Damped binomial coefficients, the five-percent uniform damping constant and
// the uniformly-damped binomial denominator polynomial.

namespace udbf {

inline void validate_order(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1, got " + std::to_string(n));
}

inline void validate_damping(double zeta) {
    if (!(zeta > 0.0) || zeta > 1.0)
        throw std::invalid_argument("damping constant must be in (0, 1], got " + std::to_string(zeta));
}

// n-choose-i. Exact integer arithmetic where uint64 cannot overflow (n <= 24
// covers every tabulated order with lots of headroom), multiplicative double
// recurrence beyond that.
inline double binomial(int n, int i) {
    validate_order(n);
    if (i < 0 || i > n)
        throw std::invalid_argument("binomial index out of range: i=" + std::to_string(i) +
                                    " n=" + std::to_string(n));
    int k = std::min(i, n - i);
    if (n <= 24) {
        std::uint64_t c = 1;
        for (int j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / j;
        return static_cast<double>(c);
    }
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * static_cast<double>(n - k + j) / j;
    return c;
}

// Undamped Pascal row [C(n,0) ... C(n,n)]; the integer skeleton that any
// damping constant is applied onto.
inline std::vector<double> binomial_row(int n) {
    validate_order(n);
    std::vector<double> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) row[static_cast<std::size_t>(i)] = binomial(n, i);
    return row;
}

/// Five-percent uniform damping constant: sqrt(n(n-1) - (n-2)) / n.
inline double damping_constant(int n) {
    validate_order(n);
    double nn = static_cast<double>(n);
    return std::sqrt(nn * (nn - 1.0) - (nn - 2.0)) / nn;
}

// Damped coefficient: boundary coefficients stay undamped, interior ones are
// scaled by zeta.
inline double damped_coefficient(int n, int i, double zeta) {
    validate_damping(zeta);
    double b = binomial(n, i);  // validates n and i
    return (i == 0 || i == n) ? b : zeta * b;
}

struct CoefficientRow {
    int n = 0;
    double zeta = 1.0;
    std::vector<double> values;  // values[i] = damped coefficient i of order n
};

inline CoefficientRow coefficient_row(int n, double zeta) {
    validate_order(n);
    validate_damping(zeta);
    CoefficientRow row{n, zeta, binomial_row(n)};
    for (int i = 1; i < n; ++i) row.values[static_cast<std::size_t>(i)] *= zeta;
    return row;
}

// Damped Pascal's rule: the next row of the damped triangle. Contributions
// that come from a boundary coefficient pick up the damping factor, so that
// the result equals coefficient_row(n + 1, zeta).
inline CoefficientRow pascal_next_row(const CoefficientRow& row) {
    validate_order(row.n);
    const int n = row.n;
    const double zeta = row.zeta;
    const auto& v = row.values;
    if (v.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("pascal_next_row: row length does not match order");

    CoefficientRow next{n + 1, zeta, std::vector<double>(static_cast<std::size_t>(n) + 2, 0.0)};
    next.values.front() = 1.0;
    next.values.back() = 1.0;
    for (int i = 1; i <= n; ++i) {
        double left = (i - 1 == 0) ? zeta * v[0] : v[static_cast<std::size_t>(i - 1)];
        double right = (i == n) ? zeta * v[static_cast<std::size_t>(n)] : v[static_cast<std::size_t>(i)];
        next.values[static_cast<std::size_t>(i)] = left + right;
    }
    return next;
}

inline double coefficient_sum(const CoefficientRow& row) {
    double s = 0.0;
    for (double v : row.values) s += v;
    return s;
}

/// Closed form of the row sum: 2 + (2^n - 2) zeta.
inline double coefficient_sum_identity(int n, double zeta) {
    validate_order(n);
    return 2.0 + (std::exp2(static_cast<double>(n)) - 2.0) * zeta;
}

// Unity-DC-gain all-pole analog prototype. denom holds descending powers of s
// with denom[i] = row[i] * omega_n^i, so denom[0] = 1 and denom[n] = omega_n^n.
// The numerator is denom[n].
struct AnalogPolynomialFilter {
    int n = 0;
    double omega_n = 1.0;
    std::vector<double> denom;

    double numerator() const { return denom.back(); }

    // Row with the cutoff scaling removed: coefficients of (s/omega_n).
    std::vector<double> normalized_row() const {
        std::vector<double> row(denom.size());
        double p = 1.0;
        for (std::size_t i = 0; i < denom.size(); ++i) {
            row[i] = denom[i] / p;
            p *= omega_n;
        }
        return row;
    }
};

inline void validate_cutoff(double omega_n) {
    if (!(omega_n > 0.0))
        throw std::invalid_argument("cutoff frequency must be > 0, got " + std::to_string(omega_n));
}

inline AnalogPolynomialFilter polynomial_from_row(const CoefficientRow& row, double omega_n) {
    validate_cutoff(omega_n);
    AnalogPolynomialFilter f{row.n, omega_n, row.values};
    double p = 1.0;
    for (auto& c : f.denom) {
        c *= p;
        p *= omega_n;
    }
    return f;
}

inline AnalogPolynomialFilter polynomial(int n, double omega_n, double zeta) {
    return polynomial_from_row(coefficient_row(n, zeta), omega_n);
}

}  // namespace udbf
