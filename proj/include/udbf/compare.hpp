#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "udbf/digital.hpp"
#include "udbf/io.hpp"
#include "udbf/noise.hpp"
#include "udbf/reference_filters.hpp"
#include "udbf/transient.hpp"

// Side-by-side comparison of the uniformly-damped, Butterworth and standard
// binomial designs filtering a noisy unit step, plus a noise-free companion
// run that the transient metrics are measured on.

namespace udbf {

struct NoiseSpec {
    std::uint64_t seed = 42;
    double sigma = 0.1;
};

struct CompareColumn {
    std::string name;
    std::vector<double> noisy;
    std::vector<double> clean;
    double overshoot_pct = 0.0;        // from the noise-free companion
    double rise_time_10_90 = 0.0;      // from the noise-free companion
    double residual_noise_variance = 0.0;  // noisy output vs 1 over the tail
};

struct CompareResult {
    int n = 0;
    double omega_n = 1.0;
    double sample_rate = 0.0;
    std::vector<double> t;
    std::vector<double> input;  // noisy unit step
    std::vector<CompareColumn> columns;
};

inline double default_compare_fs(double omega_n) {
    return 100.0 * omega_n / (2.0 * std::numbers::pi);
}

inline CompareResult compare_filters(int n, double omega_n, const NoiseSpec& noise,
                                     double sample_rate, double horizon) {
    validate_order(n);
    validate_cutoff(omega_n);
    if (!(horizon > 0.0)) throw std::invalid_argument("compare_filters: horizon must be > 0");

    CompareResult result;
    result.n = n;
    result.omega_n = omega_n;
    result.sample_rate = sample_rate;

    const auto samples = static_cast<std::size_t>(std::ceil(horizon * sample_rate)) + 1;
    result.t.resize(samples);
    for (std::size_t k = 0; k < samples; ++k) result.t[k] = static_cast<double>(k) / sample_rate;

    GaussianNoise gauss(noise.seed, noise.sigma);
    result.input.resize(samples);
    for (auto& x : result.input) x = 1.0 + gauss.next();
    const std::vector<double> clean_input(samples, 1.0);

    const FilterKind kinds[] = {FilterKind::FivePercentUdb, FilterKind::Butterworth,
                                FilterKind::StandardBinomial};
    for (FilterKind kind : kinds) {
        AnalogPolynomialFilter proto = design(kind, n, omega_n);
        DigitalIIR iir = bilinear_transform(proto, sample_rate);

        CompareColumn col;
        col.name = to_string(kind);
        FilterState noisy_state = make_state(iir);
        col.noisy = process_block(iir, noisy_state, result.input);
        FilterState clean_state = make_state(iir);
        col.clean = process_block(iir, clean_state, clean_input);

        SimulationResult clean_run{1.0 / sample_rate, result.t, col.clean, InputKind::Step};
        TransientMetrics metrics = transient_metrics(clean_run);
        col.overshoot_pct = metrics.overshoot_pct;
        col.rise_time_10_90 = metrics.rise_time_10_90;

        double acc = 0.0;
        std::size_t tail_begin = samples / 2;
        for (std::size_t k = tail_begin; k < samples; ++k) {
            double d = col.noisy[k] - 1.0;
            acc += d * d;
        }
        col.residual_noise_variance = acc / static_cast<double>(samples - tail_begin);
        result.columns.push_back(std::move(col));
    }
    return result;
}

inline io::Table compare_table(const CompareResult& result) {
    io::Table table;
    table.columns = {"t", "input"};
    for (const auto& col : result.columns) table.columns.push_back(col.name);
    table.rows.reserve(result.t.size());
    for (std::size_t k = 0; k < result.t.size(); ++k) {
        std::vector<double> row{result.t[k], result.input[k]};
        for (const auto& col : result.columns) row.push_back(col.noisy[k]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline io::Report compare_metrics(const CompareResult& result) {
    io::Report report;
    for (const auto& col : result.columns) {
        report.entries.emplace_back(col.name + ".overshoot_pct", col.overshoot_pct);
        report.entries.emplace_back(col.name + ".rise_time_10_90", col.rise_time_10_90);
        report.entries.emplace_back(col.name + ".residual_noise_variance",
                                    col.residual_noise_variance);
    }
    return report;
}

inline std::string render_compare_report(const CompareResult& result, io::OutputFormat format) {
    if (format == io::OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["n"] = result.n;
        j["omega_n"] = result.omega_n;
        j["sample_rate"] = result.sample_rate;
        nlohmann::ordered_json metrics;
        for (const auto& col : result.columns) {
            nlohmann::ordered_json m;
            m["overshoot_pct"] = col.overshoot_pct;
            m["rise_time_10_90"] = col.rise_time_10_90;
            m["residual_noise_variance"] = col.residual_noise_variance;
            metrics[col.name] = std::move(m);
        }
        j["metrics"] = std::move(metrics);
        j["table"] = nlohmann::ordered_json::parse(io::to_json(compare_table(result)));
        return j.dump(2) + "\n";
    }
    std::string out = io::render(compare_metrics(result), format);
    out += "\n";
    out += io::render(compare_table(result), format);
    return out;
}

}  // namespace udbf
