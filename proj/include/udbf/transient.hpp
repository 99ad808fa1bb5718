#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "udbf/damped_binomial.hpp"
#include "udbf/polynomial_roots.hpp"

// Time-domain behaviour: companion-form realization, fixed-step RK4 step and
// impulse simulation, transient metrics and pole computation.

namespace udbf {

// Controllable companion form; A is row-major n x n, y = C x, D = 0.
struct StateSpaceRealization {
    int n = 0;
    std::vector<double> A;
    std::vector<double> B;
    std::vector<double> C;
    double D = 0.0;
};

inline StateSpaceRealization to_state_space(const AnalogPolynomialFilter& f) {
    const int n = f.n;
    StateSpaceRealization ss;
    ss.n = n;
    ss.A.assign(static_cast<std::size_t>(n) * n, 0.0);
    ss.B.assign(static_cast<std::size_t>(n), 0.0);
    ss.C.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) ss.A[static_cast<std::size_t>(i) * n + i + 1] = 1.0;
    for (int j = 0; j < n; ++j)
        ss.A[static_cast<std::size_t>(n - 1) * n + j] = -f.denom[static_cast<std::size_t>(n - j)];
    ss.B.back() = 1.0;
    ss.C.front() = f.numerator();
    return ss;
}

enum class InputKind { Step, Impulse };

struct SimulationResult {
    double dt = 0.0;
    std::vector<double> t;
    std::vector<double> y;
    InputKind input_kind = InputKind::Step;
};

struct PoleSet {
    std::vector<std::complex<double>> poles;
};

inline PoleSet poles(const AnalogPolynomialFilter& f) {
    return {polynomial_roots(f.denom)};
}

inline double default_horizon(const AnalogPolynomialFilter& f) { return 30.0 * f.n / f.omega_n; }
inline double default_dt(const AnalogPolynomialFilter& f) { return 1e-3 / f.omega_n; }

namespace detail {

inline void companion_deriv(const StateSpaceRealization& ss, const std::vector<double>& x,
                            double u, std::vector<double>& dx) {
    const int n = ss.n;
    for (int i = 0; i + 1 < n; ++i) dx[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i + 1)];
    double acc = ss.B.back() * u;
    const double* bottom = ss.A.data() + static_cast<std::size_t>(n - 1) * n;
    for (int j = 0; j < n; ++j) acc += bottom[j] * x[static_cast<std::size_t>(j)];
    dx[static_cast<std::size_t>(n - 1)] = acc;
}

inline SimulationResult integrate(const AnalogPolynomialFilter& f, InputKind kind,
                                  double horizon, double dt) {
    if (!(horizon > 0.0)) throw std::invalid_argument("simulate: horizon must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be > 0");

    // Step-size guard against the fastest mode; induced norms of the
    // companion matrix overestimate it by orders of magnitude at high n, so
    // the spectral radius is used.
    double rho = 0.0;
    for (const auto& p : polynomial_roots(f.denom)) rho = std::max(rho, std::abs(p));
    if (dt >= 1.0 / (2.0 * rho))
        throw std::invalid_argument("simulate: dt too large for stability (dt >= 1/(2 rho(A)))");

    StateSpaceRealization ss = to_state_space(f);
    const int n = ss.n;
    const double u = (kind == InputKind::Step) ? 1.0 : 0.0;
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    if (kind == InputKind::Impulse) x = ss.B;

    auto steps = static_cast<std::size_t>(std::ceil(horizon / dt));
    SimulationResult result;
    result.dt = dt;
    result.input_kind = kind;
    result.t.reserve(steps + 1);
    result.y.reserve(steps + 1);

    std::vector<double> k1(x.size()), k2(x.size()), k3(x.size()), k4(x.size()), xs(x.size());
    auto output = [&](const std::vector<double>& state) { return ss.C.front() * state[0]; };

    result.t.push_back(0.0);
    result.y.push_back(output(x));
    for (std::size_t step = 1; step <= steps; ++step) {
        companion_deriv(ss, x, u, k1);
        for (std::size_t i = 0; i < x.size(); ++i) xs[i] = x[i] + 0.5 * dt * k1[i];
        companion_deriv(ss, xs, u, k2);
        for (std::size_t i = 0; i < x.size(); ++i) xs[i] = x[i] + 0.5 * dt * k2[i];
        companion_deriv(ss, xs, u, k3);
        for (std::size_t i = 0; i < x.size(); ++i) xs[i] = x[i] + dt * k3[i];
        companion_deriv(ss, xs, u, k4);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        result.t.push_back(static_cast<double>(step) * dt);
        result.y.push_back(output(x));
    }
    return result;
}

}  // namespace detail

inline SimulationResult simulate_step(const AnalogPolynomialFilter& f, double horizon, double dt) {
    return detail::integrate(f, InputKind::Step, horizon, dt);
}

inline SimulationResult simulate_step(const AnalogPolynomialFilter& f) {
    return simulate_step(f, default_horizon(f), default_dt(f));
}

/// Impulse response simulated as x(0) = B with zero input.
inline SimulationResult simulate_impulse(const AnalogPolynomialFilter& f, double horizon, double dt) {
    return detail::integrate(f, InputKind::Impulse, horizon, dt);
}

inline SimulationResult simulate_impulse(const AnalogPolynomialFilter& f) {
    return simulate_impulse(f, default_horizon(f), default_dt(f));
}

struct TransientMetrics {
    double overshoot_pct = 0.0;
    double peak_time = 0.0;
    double rise_time_10_90 = 0.0;
    double settling_time_2pct = 0.0;
    double final_value = 0.0;
};

// Metrics of a unit-step response. The peak is refined with a three-point
// quadratic through the samples around the discrete maximum; rise and
// settling times interpolate the threshold crossings linearly.
inline TransientMetrics transient_metrics(const SimulationResult& sim) {
    if (sim.input_kind != InputKind::Step)
        throw std::invalid_argument("transient_metrics: step-type result required");
    const auto& y = sim.y;
    const auto& t = sim.t;
    if (y.size() < 16) throw std::invalid_argument("transient_metrics: too few samples");

    const std::size_t tail_start = y.size() - y.size() / 10;
    for (std::size_t i = tail_start; i < y.size(); ++i)
        if (std::fabs(y[i] - 1.0) > 5e-3)
            throw std::runtime_error("transient_metrics: response not settled, extend the horizon");

    TransientMetrics m;
    double tail_sum = 0.0;
    for (std::size_t i = tail_start; i < y.size(); ++i) tail_sum += y[i];
    m.final_value = tail_sum / static_cast<double>(y.size() - tail_start);

    std::size_t imax = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (y[i] > y[imax]) imax = i;
    double peak = y[imax];
    double tpeak = t[imax];
    if (imax > 0 && imax + 1 < y.size()) {
        double ym = y[imax - 1], y0 = y[imax], yp = y[imax + 1];
        double denom = ym - 2.0 * y0 + yp;
        if (denom < 0.0) {
            double delta = 0.5 * (ym - yp) / denom;
            peak = y0 - 0.25 * (ym - yp) * delta;
            tpeak = t[imax] + delta * sim.dt;
        }
    }
    m.overshoot_pct = std::max(0.0, 100.0 * (peak - 1.0));
    m.peak_time = tpeak;

    auto crossing = [&](double level) {
        for (std::size_t i = 1; i < y.size(); ++i) {
            if (y[i - 1] < level && y[i] >= level) {
                double frac = (level - y[i - 1]) / (y[i] - y[i - 1]);
                return t[i - 1] + frac * sim.dt;
            }
        }
        throw std::runtime_error("transient_metrics: response never reaches " + std::to_string(level));
    };
    m.rise_time_10_90 = crossing(0.9) - crossing(0.1);

    // last excursion outside the +-2% band
    std::size_t last_out = 0;
    bool found = false;
    for (std::size_t i = y.size(); i-- > 0;) {
        if (std::fabs(y[i] - 1.0) > 0.02) {
            last_out = i;
            found = true;
            break;
        }
    }
    if (!found) {
        m.settling_time_2pct = 0.0;
    } else if (last_out + 1 >= y.size()) {
        throw std::runtime_error("transient_metrics: response not settled within +-2%");
    } else {
        double a = std::fabs(y[last_out] - 1.0);
        double b = std::fabs(y[last_out + 1] - 1.0);
        double frac = (a - 0.02) / (a - b);
        m.settling_time_2pct = t[last_out] + frac * sim.dt;
    }
    return m;
}

}  // namespace udbf
