#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "udbf/damped_binomial.hpp"
#include "udbf/polynomial.hpp"

// Frequency-domain analysis of analog prototypes: complex response with
// unwrapped phase, the squared-magnitude polynomial expansion (alpha
// coefficients), attenuation, bandwidth, flatness, selectivity, phase delay
// and group delay.
//
// The polynomial-product expansions computed from the denominator are the
// authoritative source for alpha/lambda; the closed forms parameterized by
// (n, zeta) are validated against them in the test suite.

namespace udbf {

struct ComplexResponseSample {
    double omega = 0.0;
    std::complex<double> value;
    double magnitude = 0.0;
    double phase = 0.0;  // unwrapped, phase(0) = 0
};

inline std::complex<double> response_at(const AnalogPolynomialFilter& f, double omega) {
    if (omega < 0.0) throw std::invalid_argument("response_at: omega must be >= 0");
    std::complex<double> d = poly::horner(f.denom, std::complex<double>(0.0, omega));
    if (std::abs(d) < 1e-300) throw std::runtime_error("response_at: degenerate denominator");
    return f.numerator() / d;
}

// Accumulates the unwrapped phase along an ascending frequency sweep,
// anchored at phase(0) = 0. The step size is capped so the true phase moves
// well under a half-turn between samples (a full 2 pi step would alias to
// zero and unwrap cannot see it); the cap follows the group-delay envelope,
// which falls off as 1/omega^2 past the cutoff. Ambiguous jumps are bisected
// as a second line of defence.
class PhaseTracker {
public:
    explicit PhaseTracker(const AnalogPolynomialFilter& filter) : filter_(&filter) {}

    double advance(double omega) {
        if (omega < omega_prev_)
            throw std::invalid_argument("PhaseTracker: sweep must be ascending");
        while (omega_prev_ < omega) step_to(std::min(omega, omega_prev_ + max_step()));
        return phase_prev_;
    }

private:
    double max_step() const {
        const double wn = filter_->omega_n;
        double x = std::max(omega_prev_, wn);
        return x * x / (2.0 * filter_->n * wn);
    }

    void step_to(double omega) {
        std::vector<double> pending{omega};
        while (!pending.empty()) {
            double w = pending.back();
            double principal = std::arg(response_at(*filter_, w));
            double k = std::round((phase_prev_ - principal) / (2.0 * std::numbers::pi));
            double candidate = principal + 2.0 * std::numbers::pi * k;
            if (std::fabs(candidate - phase_prev_) > 1.0 &&
                (w - omega_prev_) > 1e-12 * (1.0 + w)) {
                pending.push_back(0.5 * (omega_prev_ + w));
                continue;
            }
            phase_prev_ = candidate;
            omega_prev_ = w;
            pending.pop_back();
        }
    }

    const AnalogPolynomialFilter* filter_;
    double omega_prev_ = 0.0;
    double phase_prev_ = 0.0;
};

/// Single-point evaluation; the phase is unwrapped by an internal sweep from 0.
inline ComplexResponseSample evaluate(const AnalogPolynomialFilter& f, double omega) {
    std::complex<double> v = response_at(f, omega);
    PhaseTracker tracker(f);
    return {omega, v, std::abs(v), tracker.advance(omega)};
}

inline std::vector<ComplexResponseSample> sweep(const AnalogPolynomialFilter& f,
                                                const std::vector<double>& omegas) {
    PhaseTracker tracker(f);
    std::vector<ComplexResponseSample> out;
    out.reserve(omegas.size());
    for (double w : omegas) {
        std::complex<double> v = response_at(f, w);
        out.push_back({w, v, std::abs(v), tracker.advance(w)});
    }
    return out;
}

inline std::vector<double> log_spaced(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_spaced: need 0 < lo < hi");
    if (points < 2) throw std::invalid_argument("log_spaced: need at least 2 points");
    std::vector<double> grid(static_cast<std::size_t>(points));
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (points - 1.0));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

// ---------------------------------------------------------------------------
// Squared-magnitude expansion: |H|^-2 = r^{2n} + sum_t alpha_t r^{2(n-t)} + 1
// with r = omega/omega_n.

struct MagnitudeSquaredExpansion {
    int n = 0;
    std::vector<double> alphas;  // alpha_1 .. alpha_{n-1}

    double kappa(double ratio) const {
        double acc = 0.0;
        for (int t = 1; t < n; ++t)
            acc += alphas[static_cast<std::size_t>(t - 1)] * std::pow(ratio, 2.0 * (n - t));
        return acc;
    }

    double inverse_magnitude_squared(double ratio) const {
        return std::pow(ratio, 2.0 * n) + kappa(ratio) + 1.0;
    }
};

// Expansion of |D(j omega)|^2 / omega_n^{2n} obtained by multiplying the
// denominator by its paraconjugate; works for any prototype, not just the
// uniformly damped family.
inline MagnitudeSquaredExpansion magnitude_squared_oracle(const AnalogPolynomialFilter& f) {
    const int n = f.n;
    std::vector<double> row = f.normalized_row();
    // ascending coefficients of D(j w) / j^p: b_p = row[n - p]
    std::vector<double> b(row.rbegin(), row.rend());
    MagnitudeSquaredExpansion e{n, std::vector<double>(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0.0)};
    for (int t = 1; t < n; ++t) {
        int k = n - t;  // expansion coefficient of r^{2k}
        double s = b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
        double sign = -1.0;
        for (int r = 1; k - r >= 0 && k + r <= n; ++r) {
            s += 2.0 * sign * b[static_cast<std::size_t>(k - r)] * b[static_cast<std::size_t>(k + r)];
            sign = -sign;
        }
        e.alphas[static_cast<std::size_t>(t - 1)] = s;
    }
    return e;
}

// A term of a closed-form expansion whose (j, k) indices fall outside [0, n].
// Such a term names a coefficient that does not exist; it is treated as absent
// and reported instead of clipped silently.
struct ExpansionTermDiagnostic {
    int t = 0;
    int r = 0;
    int j = 0;
    int k = 0;
};

struct ClosedFormAlphas {
    MagnitudeSquaredExpansion expansion;
    std::vector<ExpansionTermDiagnostic> skipped;
};

// alpha_t = (C_t)^2 + 2 sum_{r=1}^{rbar} (-1)^r C_j C_k with j = t - r,
// k = t + r, t = n - i. rbar follows the parity case split, which at odd n and
// i = (n-1)/2 names one out-of-range pair; that term is skipped and reported.
inline ClosedFormAlphas closed_form_alphas(int n, double zeta) {
    if (n < 2) throw std::invalid_argument("closed_form_alphas: order must be >= 2");
    CoefficientRow row = coefficient_row(n, zeta);
    const auto& C = row.values;
    ClosedFormAlphas out;
    out.expansion.n = n;
    out.expansion.alphas.resize(static_cast<std::size_t>(n - 1), 0.0);
    for (int t = 1; t < n; ++t) {
        int i = n - t;
        int rbar;
        if ((n % 2 == 0 && i >= n / 2) || (n % 2 == 1 && 2 * i >= n - 1))
            rbar = n - i;
        else
            rbar = i;
        double s = C[static_cast<std::size_t>(t)] * C[static_cast<std::size_t>(t)];
        double sign = -1.0;
        for (int r = 1; r <= rbar; ++r, sign = -sign) {
            int j = t - r;
            int k = t + r;
            if (j < 0 || k > n) {
                out.skipped.push_back({t, r, j, k});
                continue;
            }
            s += 2.0 * sign * C[static_cast<std::size_t>(j)] * C[static_cast<std::size_t>(k)];
        }
        out.expansion.alphas[static_cast<std::size_t>(t - 1)] = s;
    }
    return out;
}

/// Attenuation in dB from the expansion: 10 log10(r^{2n} + kappa + 1).
inline double attenuation_db(const AnalogPolynomialFilter& f, double omega) {
    if (omega < 0.0) throw std::invalid_argument("attenuation_db: omega must be >= 0");
    MagnitudeSquaredExpansion e = magnitude_squared_oracle(f);
    return 10.0 * std::log10(e.inverse_magnitude_squared(omega / f.omega_n));
}

// Bandwidth at a required attenuation, solved by bisection on the monotone
// attenuation function.
inline double bandwidth_for_attenuation(const AnalogPolynomialFilter& f, double target_db) {
    if (!(target_db > 0.0))
        throw std::invalid_argument("bandwidth_for_attenuation: target must be > 0 dB");
    MagnitudeSquaredExpansion e = magnitude_squared_oracle(f);
    const double goal = std::pow(10.0, target_db / 10.0);
    double lo = 0.0;
    double hi = f.omega_n * std::pow(10.0, target_db / (20.0 * f.n) + 1.0);
    while (e.inverse_magnitude_squared(hi / f.omega_n) < goal) hi *= 2.0;
    while (hi - lo > 1e-9 * hi) {
        double mid = 0.5 * (lo + hi);
        if (e.inverse_magnitude_squared(mid / f.omega_n) < goal)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// d|H|/d omega evaluated from the expansion.
inline double magnitude_derivative(const AnalogPolynomialFilter& f, double omega) {
    if (omega < 0.0) throw std::invalid_argument("magnitude_derivative: omega must be >= 0");
    MagnitudeSquaredExpansion e = magnitude_squared_oracle(f);
    const double ratio = omega / f.omega_n;
    const double mag = 1.0 / std::sqrt(e.inverse_magnitude_squared(ratio));
    double bracket = (f.n / f.omega_n) * std::pow(ratio, 2.0 * f.n - 1.0);
    for (int t = 1; t < f.n; ++t) {
        int i = f.n - t;
        bracket += e.alphas[static_cast<std::size_t>(t - 1)] * (i / f.omega_n) *
                   std::pow(ratio, 2.0 * i - 1.0);
    }
    return -mag * mag * mag * bracket;
}

/// Negative magnitude slope at the cutoff.
inline double selectivity(const AnalogPolynomialFilter& f) {
    MagnitudeSquaredExpansion e = magnitude_squared_oracle(f);
    double alpha_sum = 0.0;
    double weighted = 0.0;
    for (int t = 1; t < f.n; ++t) {
        alpha_sum += e.alphas[static_cast<std::size_t>(t - 1)];
        weighted += e.alphas[static_cast<std::size_t>(t - 1)] * (f.n - t);
    }
    return (f.n / f.omega_n + weighted / f.omega_n) / std::pow(2.0 + alpha_sum, 1.5);
}

// ---------------------------------------------------------------------------
// Group delay expansion: tau_g = |H|^2 * W(r) / omega_n where
// W(r) = sum_{i=0}^{n-1} lambda_{n-1-i} r^{2i}.

struct GroupDelayExpansion {
    int n = 0;
    std::vector<double> lambdas;  // lambda_t for t = 0 .. n-1

    double bracket(double ratio) const {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += lambdas[static_cast<std::size_t>(n - 1 - i)] * std::pow(ratio, 2.0 * i);
        return acc;
    }
};

// Expansion from the denominator itself: with b as in the magnitude oracle,
// the coefficient of r^{2i} is sum_m (2m+1)(-1)^m b_{i-m} b_{i+1+m}. Exact for
// any prototype; this is the authoritative lambda source.
inline GroupDelayExpansion group_delay_oracle(const AnalogPolynomialFilter& f) {
    const int n = f.n;
    std::vector<double> row = f.normalized_row();
    std::vector<double> b(row.rbegin(), row.rend());
    GroupDelayExpansion e{n, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        double sign = 1.0;
        for (int m = 0; i - m >= 0 && i + 1 + m <= n; ++m, sign = -sign)
            s += (2.0 * m + 1.0) * sign * b[static_cast<std::size_t>(i - m)] *
                 b[static_cast<std::size_t>(i + 1 + m)];
        e.lambdas[static_cast<std::size_t>(n - 1 - i)] = s;
    }
    return e;
}

struct ClosedFormLambdas {
    GroupDelayExpansion expansion;
    std::vector<ExpansionTermDiagnostic> skipped;
};

// Closed form in the damped coefficients:
//   lambda_t = sum_{r=1}^{rbar} (2r-1)(-1)^{r-1} C_j C_k,
// j = t + 1 - r, k = t + r, t = n - 1 - i, rbar = n - i under the same parity
// condition as the alphas and i + 1 otherwise. The (2r-1) weights make the
// expansion reproduce -d(phase)/d(omega); without them the terms telescope to
// the wrong envelope (see the test suite, which pins this against both the
// product expansion and a finite-difference probe).
inline ClosedFormLambdas closed_form_lambdas(int n, double zeta) {
    if (n < 1) throw std::invalid_argument("closed_form_lambdas: order must be >= 1");
    CoefficientRow row = coefficient_row(n, zeta);
    const auto& C = row.values;
    ClosedFormLambdas out;
    out.expansion.n = n;
    out.expansion.lambdas.resize(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        int t = n - 1 - i;
        int rbar;
        if ((n % 2 == 0 && i >= n / 2) || (n % 2 == 1 && 2 * i >= n - 1))
            rbar = n - i;
        else
            rbar = i + 1;
        double s = 0.0;
        double sign = 1.0;
        for (int r = 1; r <= rbar; ++r, sign = -sign) {
            int j = t + 1 - r;
            int k = t + r;
            if (j < 0 || k > n) {
                out.skipped.push_back({t, r, j, k});
                continue;
            }
            s += (2.0 * r - 1.0) * sign * C[static_cast<std::size_t>(j)] * C[static_cast<std::size_t>(k)];
        }
        out.expansion.lambdas[static_cast<std::size_t>(t)] = s;
    }
    return out;
}

/// Group delay in seconds; exact expansion evaluation scaled by 1/omega_n.
inline double group_delay(const AnalogPolynomialFilter& f, double omega) {
    if (omega < 0.0) throw std::invalid_argument("group_delay: omega must be >= 0");
    const double ratio = omega / f.omega_n;
    MagnitudeSquaredExpansion mag = magnitude_squared_oracle(f);
    GroupDelayExpansion gd = group_delay_oracle(f);
    return gd.bracket(ratio) / mag.inverse_magnitude_squared(ratio) / f.omega_n;
}

/// Phase delay -phase/omega in seconds; the omega -> 0 limit equals the group
/// delay at the origin.
inline double phase_delay(const AnalogPolynomialFilter& f, double omega) {
    if (omega < 0.0) throw std::invalid_argument("phase_delay: omega must be >= 0");
    if (omega == 0.0) return group_delay(f, 0.0);
    return -evaluate(f, omega).phase / omega;
}

// ---------------------------------------------------------------------------
// Sweep table (the module's export surface; formatting lives in io.hpp).

struct SweepRow {
    double omega = 0.0;
    double magnitude = 0.0;
    double magnitude_db = 0.0;
    double phase_rad = 0.0;
    double phase_delay_s = 0.0;
    double group_delay_s = 0.0;
};

inline std::vector<SweepRow> analyze_sweep(const AnalogPolynomialFilter& f,
                                           const std::vector<double>& omegas) {
    MagnitudeSquaredExpansion mag = magnitude_squared_oracle(f);
    GroupDelayExpansion gd = group_delay_oracle(f);
    PhaseTracker tracker(f);
    std::vector<SweepRow> rows;
    rows.reserve(omegas.size());
    for (double w : omegas) {
        double m = std::abs(response_at(f, w));
        double phase = tracker.advance(w);
        double ratio = w / f.omega_n;
        SweepRow row;
        row.omega = w;
        row.magnitude = m;
        row.magnitude_db = 20.0 * std::log10(m);
        row.phase_rad = phase;
        row.phase_delay_s = (w > 0.0) ? -phase / w : group_delay(f, 0.0);
        row.group_delay_s = gd.bracket(ratio) / mag.inverse_magnitude_squared(ratio) / f.omega_n;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace udbf
