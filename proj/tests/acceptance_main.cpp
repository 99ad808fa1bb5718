// Acceptance suite: runs every shipped claim end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "udbf/udbf.hpp"

namespace {

using namespace udbf;

struct Suite {
    int failures = 0;

    void run(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

AnalogPolynomialFilter udb(int n, double wn = 1.0) {
    return polynomial(n, wn, damping_constant(n));
}

double cutoff_hz(double wn) { return wn / (2.0 * std::numbers::pi); }

bool criterion_damping_table(std::string& detail) {
    const double table[] = {1.0,
                            std::sqrt(2.0) / 2.0,
                            std::sqrt(5.0) / 3.0,
                            std::sqrt(10.0) / 4.0,
                            std::sqrt(17.0) / 5.0,
                            std::sqrt(26.0) / 6.0,
                            std::sqrt(37.0) / 7.0,
                            std::sqrt(50.0) / 8.0,
                            std::sqrt(65.0) / 9.0,
                            std::sqrt(82.0) / 10.0};
    for (int n = 1; n <= 10; ++n) {
        double z = damping_constant(n);
        if (std::fabs(z - table[n - 1]) > 1e-12 * table[n - 1]) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_overshoot(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        auto metrics = transient_metrics(simulate_step(udb(n)));
        if (metrics.overshoot_pct > 5.0 + 0.1) {
            log << " n=" << n << " overshoot=" << metrics.overshoot_pct;
            ok = false;
        }
        if (n == 1 && metrics.overshoot_pct != 0.0) {
            log << " n=1 nonzero overshoot";
            ok = false;
        }
        if (n == 2 &&
            std::fabs(metrics.overshoot_pct - 100.0 * std::exp(-std::numbers::pi)) > 0.05) {
            log << " n=2 overshoot=" << metrics.overshoot_pct;
            ok = false;
        }
    }
    detail = log.str();
    return ok;
}

bool criterion_butterworth_table(std::string& detail) {
    const std::vector<std::vector<double>> published = {
        {0.71}, {0.67, 0.67}, {0.65, 0.57}, {0.65, 0.52}, {0.64, 0.49, 0.46}};
    std::ostringstream log;
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
        auto f = butterworth_polynomial(n, 1.0);
        const auto& expect = published[static_cast<std::size_t>(n - 2)];
        for (int i = 1; i < n; ++i) {
            double ratio = f.denom[static_cast<std::size_t>(i)] / binomial(n, i);
            double target = expect[static_cast<std::size_t>(std::min(i, n - i) - 1)];
            if (std::fabs(ratio - target) > 0.005) {
                log << " n=" << n << " i=" << i << " ratio=" << ratio << " published=" << target;
                ok = false;
            }
        }
    }
    detail = log.str();
    return ok;
}

bool criterion_cutoff_phase(std::string& detail) {
    for (int n = 1; n <= 10; ++n) {
        double phase = evaluate(udb(n), 1.0).phase;
        if (std::fabs(phase + n * std::numbers::pi / 4.0) > 1e-9) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_origin_delays(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    for (double wn : {1.0, 2.0 * std::numbers::pi * 50.0}) {
        for (int n = 1; n <= 10; ++n) {
            auto f = udb(n, wn);
            double tp = phase_delay(f, 0.0);
            double tg = group_delay(f, 0.0);
            if (std::fabs(tp - damping_constant(n) * n / wn) > 1e-6) {
                log << " tau_p n=" << n << " wn=" << wn << " got=" << tp;
                ok = false;
            }
            if (std::fabs(tg - static_cast<double>(n) / wn) > 1e-6) {
                if (ok) log << " tau_g(0) is zeta*n/wn, not n/wn:";
                log << " n=" << n << (wn == 1.0 ? "" : "@wn=314.159") << " got=" << tg;
                ok = false;
            }
        }
    }
    detail = log.str();
    return ok;
}

bool criterion_rolloff(std::string& detail) {
    for (int n = 1; n <= 10; ++n) {
        auto f = udb(n);
        double slope = attenuation_db(f, 100.0) - attenuation_db(f, 10.0);
        if (std::fabs(slope - 20.0 * n) > 0.1) {
            detail = "n=" + std::to_string(n) + " slope=" + std::to_string(slope);
            return false;
        }
    }
    return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    for (int n = 2; n <= 10; ++n) {
        for (double z : {damping_constant(n), 1.0}) {
            auto f = polynomial(n, 1.0, z);
            auto closed = closed_form_alphas(n, z).expansion;
            auto oracle = magnitude_squared_oracle(f);
            for (std::size_t i = 0; i < oracle.alphas.size(); ++i) {
                double denom = std::max(1.0, std::fabs(oracle.alphas[i]));
                if (std::fabs(closed.alphas[i] - oracle.alphas[i]) > 1e-9 * denom) {
                    log << " alpha n=" << n << " z=" << z;
                    ok = false;
                }
            }
            auto lambdas = closed_form_lambdas(n, z).expansion;
            auto mag = magnitude_squared_oracle(f);
            for (double w : {0.2, 0.7, 1.0, 2.3, 5.0}) {
                double closed_tg =
                    lambdas.bracket(w) / mag.inverse_magnitude_squared(w) / f.omega_n;
                double h = 1e-6;
                double fd = -(evaluate(f, w + h).phase - evaluate(f, w - h).phase) / (2.0 * h);
                if (std::fabs(closed_tg - fd) > 1e-6 * std::fabs(fd)) {
                    log << " lambda n=" << n << " z=" << z << " w=" << w;
                    ok = false;
                }
            }
        }
    }
    detail = log.str();
    return ok;
}

bool criterion_monotone_magnitude(std::string& detail) {
    for (int n = 1; n <= 10; ++n) {
        auto f = udb(n);
        double prev = evaluate(f, 0.0).magnitude;
        for (int k = 1; k <= 1000; ++k) {
            double m = evaluate(f, 10.0 * k / 1000.0).magnitude;
            if (!(m < prev)) {
                detail = "n=" + std::to_string(n) + " at k=" + std::to_string(k);
                return false;
            }
            prev = m;
        }
    }
    return true;
}

bool criterion_pole_structure(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        auto f = udb(n);
        auto set = poles(f);
        for (const auto& p : set.poles) {
            if (!(p.real() < 0.0)) {
                log << " n=" << n << " pole in RHP";
                ok = false;
            }
            std::complex<double> inv = 1.0 / p;
            double best = 1e9;
            for (const auto& q : set.poles) best = std::min(best, std::abs(q - inv));
            if (best > 1e-8) {
                log << " n=" << n << " reciprocal gap=" << best;
                ok = false;
            }
        }
        if (n % 2 == 1) {
            double resid = std::abs(poly::horner(f.denom, std::complex<double>(-1.0, 0.0)));
            if (resid > 1e-10) {
                log << " n=" << n << " D(-1)=" << resid;
                ok = false;
            }
        }
    }
    detail = log.str();
    return ok;
}

bool criterion_pascal_property(std::string& detail) {
    for (int target = 2; target <= 20; ++target) {
        for (double zeta : {damping_constant(target), 1.0, 0.5}) {
            CoefficientRow row = coefficient_row(1, zeta);
            for (int n = 1; n < target; ++n) row = pascal_next_row(row);
            auto direct = coefficient_row(target, zeta);
            for (std::size_t i = 0; i < row.values.size(); ++i) {
                if (std::fabs(row.values[i] - direct.values[i]) > 1e-12 * direct.values[i]) {
                    detail = "chain n=" + std::to_string(target);
                    return false;
                }
            }
        }
    }
    for (double wn : {0.1, 1.0, 250.0}) {
        for (int n = 1; n <= 20; ++n) {
            double z = damping_constant(n);
            auto scaled = polynomial(n, wn, z);
            auto unit = polynomial(n, 1.0, z);
            double p = 1.0;
            for (int i = 0; i <= n; ++i) {
                double expect = unit.denom[static_cast<std::size_t>(i)] * p;
                if (std::fabs(scaled.denom[static_cast<std::size_t>(i)] - expect) > 1e-12 * expect) {
                    detail = "denormalization n=" + std::to_string(n) + " wn=" + std::to_string(wn);
                    return false;
                }
                p *= wn;
            }
        }
    }
    return true;
}

bool criterion_comparison_run(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    NoiseSpec noise;  // seed 42, sigma 0.1
    const int n = 7;
    const double wn = 1.0;
    const double fs = default_compare_fs(wn);
    auto result = compare_filters(n, wn, noise, fs, 30.0 * n / wn);
    const auto& udb_col = result.columns[0];
    const auto& bin_col = result.columns[2];
    if (!(udb_col.rise_time_10_90 < bin_col.rise_time_10_90)) {
        log << " rise(udb)=" << udb_col.rise_time_10_90 << " !< rise(bin)=" << bin_col.rise_time_10_90;
        ok = false;
    }
    if (!(bin_col.overshoot_pct <= 0.5)) {
        log << " binomial overshoot=" << bin_col.overshoot_pct;
        ok = false;
    }
    if (!(udb_col.overshoot_pct > bin_col.overshoot_pct && udb_col.overshoot_pct <= 5.0)) {
        log << " udb overshoot=" << udb_col.overshoot_pct;
        ok = false;
    }
    auto again = compare_filters(n, wn, noise, fs, 30.0 * n / wn);
    if (render_compare_report(result, io::OutputFormat::Csv) !=
        render_compare_report(again, io::OutputFormat::Csv)) {
        log << " outputs not byte-identical for the same seed";
        ok = false;
    }
    detail = log.str();
    return ok;
}

bool criterion_digitization(std::string& detail) {
    std::ostringstream log;
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        double fs = 100.0 * cutoff_hz(1.0);
        auto iir = bilinear_transform(udb(n), fs);
        double gain = dc_gain(iir);
        if (std::fabs(gain - 1.0) > 1e-9) {
            log << " n=" << n << " dc=" << gain;
            ok = false;
        }
        for (const auto& p : digital_poles(iir)) {
            if (!(std::abs(p) < 1.0)) {
                log << " n=" << n << " |pole|=" << std::abs(p);
                ok = false;
            }
        }
        FilterState state = make_state(iir);
        auto samples = static_cast<std::size_t>(30.0 * n * fs) + 1;
        double peak = 0.0;
        for (std::size_t k = 0; k < samples; ++k)
            peak = std::max(peak, process_sample(iir, state, 1.0));
        if (100.0 * (peak - 1.0) > 5.2) {
            log << " n=" << n << " digital overshoot=" << 100.0 * (peak - 1.0);
            ok = false;
        }
    }
    detail = log.str();
    return ok;
}

}  // namespace

int main() {
    Suite suite;
    suite.run(1, "five-percent damping constants match the tabulated surds",
              criterion_damping_table);
    suite.run(2, "analog step overshoot <= 5.1% for n in [1,10], exact at n=1,2",
              criterion_overshoot);
    suite.run(3, "butterworth interior ratios match the published 2-dp table (+-0.005)",
              criterion_butterworth_table);
    suite.run(4, "unwrapped cutoff phase equals -n pi/4 (+-1e-9)", criterion_cutoff_phase);
    suite.run(5, "origin delays: tau_p = zeta n/wn and tau_g = n/wn (+-1e-6)",
              criterion_origin_delays);
    suite.run(6, "stopband slope is 20 n dB/decade (+-0.1 dB)", criterion_rolloff);
    suite.run(7, "closed-form alpha/lambda match product and derivative oracles",
              criterion_oracle_equivalence);
    suite.run(8, "magnitude strictly decreasing over 1000-point sweep", criterion_monotone_magnitude);
    suite.run(9, "poles: left half-plane, odd-order root at -wn, reciprocal closure",
              criterion_pole_structure);
    suite.run(10, "damped Pascal chaining and denormalization identities", criterion_pascal_property);
    suite.run(11, "seventh-order noisy-step comparison: ordering and determinism",
              criterion_comparison_run);
    suite.run(12, "bilinear designs: unit DC gain, stable poles, overshoot <= 5.2%",
              criterion_digitization);

    if (suite.failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", suite.failures);
    return suite.failures == 0 ? 0 : 1;
}
