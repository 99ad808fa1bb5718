#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "udbf/damped_binomial.hpp"
#include "udbf/polynomial.hpp"
#include "udbf/polynomial_roots.hpp"

// Digitization: bilinear IIR with optional prewarping, the direct FIR kernel
// built from a damped coefficient row, and streaming sample processing.

namespace udbf {

// Coefficients in negative powers of z, a[0] = 1.
struct DigitalIIR {
    std::vector<double> b;
    std::vector<double> a;
    double sample_rate = 0.0;
};

struct FIRKernel {
    std::vector<double> taps;
    bool normalized = false;
};

// Transposed direct-form II delay line, zero-initialized; one state per stream.
struct FilterState {
    std::vector<double> w;
};

// The denominator coefficient sums involved here cancel to many orders below
// the individual coefficients at high order and oversampling; compensated
// sums keep the realized DC gain meaningful.
inline double dc_gain(const DigitalIIR& iir) {
    return poly::compensated_sum(iir.b) / poly::compensated_sum(iir.a);
}

// Bilinear transform s -> K (z-1)/(z+1) by polynomial composition. With
// prewarp (default) K = omega_n / tan(omega_n / (2 fs)), which makes the
// digital response at the cutoff bin equal the analog response at omega_n;
// otherwise K = 2 fs. The numerator gain is taken from the composed
// denominator so the realized filter has unit DC gain exactly.
//
// The composition is accumulated in double-double arithmetic so the stored
// coefficients are the correctly rounded values of the exact composition.
// At high order and heavy oversampling the realized poles shift visibly with
// every last-ulp coefficient change, so "exact then rounded once" is the only
// reproducible target.
inline DigitalIIR bilinear_transform(const AnalogPolynomialFilter& f, double sample_rate,
                                     bool prewarp = true) {
    if (!(sample_rate > 0.0)) throw std::invalid_argument("bilinear_transform: sample rate must be > 0");
    if (f.omega_n >= std::numbers::pi * sample_rate)
        throw std::invalid_argument("bilinear_transform: cutoff at or above Nyquist");

    const int n = f.n;
    const double K = prewarp ? f.omega_n / std::tan(f.omega_n / (2.0 * sample_rate))
                             : 2.0 * sample_rate;

    std::vector<poly::DoubleDouble> acc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<double> term{1.0};  // (z-1)^{n-i} (z+1)^i, exact in double
        for (int j = 0; j < n - i; ++j) term = poly::convolve(term, {1.0, -1.0});
        for (int j = 0; j < i; ++j) term = poly::convolve(term, {1.0, 1.0});
        poly::DoubleDouble scale{f.denom[static_cast<std::size_t>(i)], 0.0};
        for (int j = 0; j < n - i; ++j) scale = poly::dd_mul(scale, K);
        for (std::size_t k = 0; k < acc.size(); ++k)
            acc[k] = poly::dd_add(acc[k], poly::dd_mul(scale, term[k]));
    }
    std::vector<double> a(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k)
        a[k] = poly::dd_value(poly::dd_div(acc[k], acc.front()));

    const double gain = poly::compensated_sum(a) / std::exp2(static_cast<double>(n));
    std::vector<double> b = binomial_row(n);
    for (auto& c : b) c *= gain;

    return {std::move(b), std::move(a), sample_rate};
}

/// FIR taps are a damped coefficient row, optionally scaled to unit sum using
/// the closed-form row total.
inline FIRKernel fir_kernel(int n, double zeta, bool normalized) {
    CoefficientRow row = coefficient_row(n, zeta);
    FIRKernel kernel{std::move(row.values), normalized};
    if (normalized) {
        const double total = coefficient_sum_identity(n, zeta);
        for (auto& t : kernel.taps) t /= total;
    }
    return kernel;
}

inline FilterState make_state(const DigitalIIR& iir) {
    return {std::vector<double>(std::max(iir.a.size(), iir.b.size()) - 1, 0.0)};
}

inline FilterState make_state(const FIRKernel& kernel) {
    return {std::vector<double>(kernel.taps.size() - 1, 0.0)};
}

// Transposed direct-form II update.
inline double process_sample(const DigitalIIR& iir, FilterState& state, double x) {
    const std::size_t m = state.w.size();
    if (m + 1 != std::max(iir.a.size(), iir.b.size()))
        throw std::invalid_argument("process_sample: state dimension mismatch");
    auto tap = [](const std::vector<double>& v, std::size_t i) {
        return i < v.size() ? v[i] : 0.0;
    };
    const double y = tap(iir.b, 0) * x + (m > 0 ? state.w[0] : 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double next = (i + 1 < m) ? state.w[i + 1] : 0.0;
        state.w[i] = tap(iir.b, i + 1) * x - tap(iir.a, i + 1) * y + next;
    }
    return y;
}

inline double process_sample(const FIRKernel& kernel, FilterState& state, double x) {
    const std::size_t m = state.w.size();
    if (m + 1 != kernel.taps.size())
        throw std::invalid_argument("process_sample: state dimension mismatch");
    const double y = kernel.taps[0] * x + (m > 0 ? state.w[0] : 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double next = (i + 1 < m) ? state.w[i + 1] : 0.0;
        state.w[i] = kernel.taps[i + 1] * x + next;
    }
    return y;
}

inline std::vector<double> process_block(const DigitalIIR& iir, FilterState& state,
                                         const std::vector<double>& x) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = process_sample(iir, state, x[i]);
    return y;
}

/// b(e^{-jw}) / a(e^{-jw}) for w in [0, pi] rad/sample.
inline std::complex<double> digital_frequency_response(const DigitalIIR& iir, double omega_digital) {
    if (omega_digital < 0.0 || omega_digital > std::numbers::pi)
        throw std::invalid_argument("digital_frequency_response: omega must be in [0, pi]");
    auto evaluate = [&](const std::vector<double>& c) {
        std::vector<double> re(c.size()), im(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            re[k] = c[k] * std::cos(omega_digital * static_cast<double>(k));
            im[k] = -c[k] * std::sin(omega_digital * static_cast<double>(k));
        }
        return std::complex<double>(poly::compensated_sum(re), poly::compensated_sum(im));
    };
    return evaluate(iir.b) / evaluate(iir.a);
}

inline std::vector<std::complex<double>> digital_poles(const DigitalIIR& iir) {
    return polynomial_roots(iir.a);
}

}  // namespace udbf
