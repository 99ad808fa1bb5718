#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Dense polynomial helpers shared across the library. Coefficient vectors are
// stored in descending powers unless a function says otherwise.

namespace udbf::poly {

inline std::vector<double> convolve(const std::vector<double>& u,
                                    const std::vector<double>& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("convolve: empty operand");
    std::vector<double> out(u.size() + v.size() - 1, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i + j] += u[i] * v[j];
    return out;
}

template <typename T>
T horner(const std::vector<double>& coeffs, T x) {
    T acc = T(0);
    for (double c : coeffs) acc = acc * x + T(c);
    return acc;
}

inline std::vector<double> derivative(const std::vector<double>& coeffs) {
    const std::size_t n = coeffs.size();
    if (n <= 1) return {0.0};
    std::vector<double> out(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out[i] = coeffs[i] * static_cast<double>(n - 1 - i);
    return out;
}

// Magnitude bound Σ|c_i| |x|^{n-i}, used for residual scaling in root finding.
inline double magnitude_at(const std::vector<double>& coeffs, double abs_x) {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * abs_x + std::fabs(c);
    return acc;
}

// Neumaier compensated summation. The digital-filter module sums coefficient
// sets whose plain sum cancels many orders of magnitude below the addends.
inline double compensated_sum(const std::vector<double>& xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

// Double-double value: hi + lo with |lo| <= ulp(hi)/2. Only the operations the
// root polisher needs.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DoubleDouble r = two_sum(s.hi, s.lo);
    return r;
}

inline DoubleDouble dd_add(DoubleDouble a, double b) { return dd_add(a, DoubleDouble{b, 0.0}); }

inline DoubleDouble dd_mul(DoubleDouble a, double b) {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    DoubleDouble r = two_sum(p.hi, p.lo);
    return r;
}

inline DoubleDouble dd_div(DoubleDouble a, DoubleDouble b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = dd_add(a, dd_mul(b, -q1));
    double q2 = (r.hi + r.lo) / b.hi;
    return two_sum(q1, q2);
}

inline double dd_value(DoubleDouble a) { return a.hi + a.lo; }

// Horner evaluation of a real-coefficient polynomial at a complex point with
// double-double accumulation. Resolves values far below the plain-double
// cancellation floor, which clustered digital poles require.
inline std::complex<double> horner_dd(const std::vector<double>& coeffs,
                                      std::complex<double> z) {
    DoubleDouble re{0.0, 0.0};
    DoubleDouble im{0.0, 0.0};
    const double zr = z.real();
    const double zi = z.imag();
    for (double c : coeffs) {
        DoubleDouble t1 = dd_mul(re, zr);
        DoubleDouble t2 = dd_mul(im, zi);
        DoubleDouble t3 = dd_mul(re, zi);
        DoubleDouble t4 = dd_mul(im, zr);
        re = dd_add(dd_add(t1, dd_mul(t2, -1.0)), c);
        im = dd_add(t3, t4);
    }
    return {re.hi + re.lo, im.hi + im.lo};
}

}  // namespace udbf::poly
