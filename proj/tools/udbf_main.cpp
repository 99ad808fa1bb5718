// Command-line front end: design, analyze, simulate, digitize and compare
// subcommands emitting tables and machine-readable coefficient records.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "udbf/udbf.hpp"

namespace {

struct FilterArgs {
    std::string kind = "udb";
    int n = 0;
    double wn = 0.0;
    double hz = 0.0;
    std::optional<double> zeta;
};

void add_output_options(CLI::App* cmd, std::string& format, std::string& out_path) {
    cmd->add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
}

void add_filter_options(CLI::App* cmd, FilterArgs& args, bool need_kind = true) {
    if (need_kind)
        cmd->add_option("--kind", args.kind, "filter family: udb, butterworth or binomial")
            ->check(CLI::IsMember({"udb", "butterworth", "binomial"}));
    cmd->add_option("-n,--order", args.n, "filter order")->required();
    auto* wn = cmd->add_option("--wn", args.wn, "cutoff frequency in rad/s");
    auto* hz = cmd->add_option("--hz", args.hz, "cutoff frequency in Hz");
    wn->excludes(hz);
    hz->excludes(wn);
    cmd->add_option("--zeta", args.zeta, "damping override (udb kind only)");
}

udbf::FilterKind parse_kind(const std::string& kind) {
    if (kind == "udb") return udbf::FilterKind::FivePercentUdb;
    if (kind == "butterworth") return udbf::FilterKind::Butterworth;
    if (kind == "binomial") return udbf::FilterKind::StandardBinomial;
    throw std::invalid_argument("unknown filter kind: " + kind);
}

double cutoff_rad_per_s(const FilterArgs& args) {
    if (args.wn > 0.0 && args.hz > 0.0)
        throw std::invalid_argument("give exactly one of --wn or --hz");
    if (args.hz > 0.0) return 2.0 * std::numbers::pi * args.hz;
    if (args.wn > 0.0) return args.wn;
    throw std::invalid_argument("a positive cutoff is required (--wn or --hz)");
}

udbf::AnalogPolynomialFilter build_filter(const FilterArgs& args) {
    return udbf::design(parse_kind(args.kind), args.n, cutoff_rad_per_s(args), args.zeta);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string design_text(const udbf::io::CoefficientRecord& rec) {
    std::string out;
    out += "kind = " + rec.kind + "\n";
    out += "n = " + std::to_string(rec.n) + "\n";
    out += "zeta = " + udbf::io::format_double(rec.zeta) + "\n";
    out += "D(s) =";
    for (std::size_t i = 0; i < rec.a.size(); ++i) {
        int power = static_cast<int>(rec.a.size()) - 1 - static_cast<int>(i);
        out += (i == 0 ? " " : " + ");
        if (rec.a[i] != 1.0 || power == 0) out += udbf::io::format_double(rec.a[i]);
        if (rec.a[i] != 1.0 && power > 0) out += " ";
        if (power > 1) out += "s^" + std::to_string(power);
        if (power == 1) out += "s";
    }
    out += "\nnumerator = " + udbf::io::format_double(rec.b.front()) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniformly-damped binomial filter toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;

    FilterArgs design_args;
    auto* cmd_design = app.add_subcommand("design", "print damping constant and polynomial");
    add_filter_options(cmd_design, design_args);
    add_output_options(cmd_design, format, out_path);

    FilterArgs analyze_args;
    int points = 1000;
    double sweep_min = 0.0, sweep_max = 0.0;
    auto* cmd_analyze = app.add_subcommand("analyze", "frequency-sweep table");
    add_filter_options(cmd_analyze, analyze_args);
    cmd_analyze->add_option("--points", points, "sweep points")->capture_default_str();
    cmd_analyze->add_option("--min", sweep_min, "sweep start, rad/s (default wn/100)");
    cmd_analyze->add_option("--max", sweep_max, "sweep end, rad/s (default 100 wn)");
    add_output_options(cmd_analyze, format, out_path);

    FilterArgs sim_args;
    std::string input_kind = "step";
    double horizon = 0.0, dt = 0.0;
    auto* cmd_simulate = app.add_subcommand("simulate", "transient simulation table and metrics");
    add_filter_options(cmd_simulate, sim_args);
    cmd_simulate->add_option("--input", input_kind, "step or impulse")
        ->check(CLI::IsMember({"step", "impulse"}))
        ->capture_default_str();
    cmd_simulate->add_option("--horizon", horizon, "simulation horizon, s (default 30 n / wn)");
    cmd_simulate->add_option("--dt", dt, "integration step, s (default 1e-3 / wn)");
    add_output_options(cmd_simulate, format, out_path);

    FilterArgs digitize_args;
    double fs = 0.0;
    bool prewarp = true;
    auto* cmd_digitize = app.add_subcommand("digitize", "bilinear IIR coefficient record");
    add_filter_options(cmd_digitize, digitize_args);
    cmd_digitize->add_option("--fs", fs, "sample rate, Hz")->required();
    cmd_digitize->add_flag("--prewarp,!--no-prewarp", prewarp, "match the analog cutoff response")
        ->capture_default_str();
    add_output_options(cmd_digitize, format, out_path);

    int cmp_n = 7;
    double cmp_wn = 1.0, cmp_hz = 0.0, cmp_fs = 0.0, cmp_horizon = 0.0;
    std::uint64_t seed = 42;
    double sigma = 0.1;
    auto* cmd_compare = app.add_subcommand("compare", "filter a noisy unit step with all three designs");
    cmd_compare->add_option("-n,--order", cmp_n, "filter order")->capture_default_str();
    auto* cmp_wn_opt = cmd_compare->add_option("--wn", cmp_wn, "cutoff frequency, rad/s")->capture_default_str();
    auto* cmp_hz_opt = cmd_compare->add_option("--hz", cmp_hz, "cutoff frequency, Hz");
    cmp_wn_opt->excludes(cmp_hz_opt);
    cmp_hz_opt->excludes(cmp_wn_opt);
    cmd_compare->add_option("--fs", cmp_fs, "sample rate, Hz (default 100 wn / 2 pi)");
    cmd_compare->add_option("--horizon", cmp_horizon, "run length, s (default 30 n / wn)");
    cmd_compare->add_option("--seed", seed, "noise seed")->capture_default_str();
    cmd_compare->add_option("--sigma", sigma, "noise standard deviation")->capture_default_str();
    add_output_options(cmd_compare, format, out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        const udbf::io::OutputFormat fmt = udbf::io::parse_format(format);

        if (cmd_design->parsed()) {
            auto filter = build_filter(design_args);
            double zeta = udbf::design_zeta(parse_kind(design_args.kind), design_args.n,
                                            design_args.zeta);
            auto rec = udbf::io::analog_record(design_args.kind, zeta, filter);
            if (fmt == udbf::io::OutputFormat::Json)
                emit(udbf::io::to_json(rec), out_path);
            else if (fmt == udbf::io::OutputFormat::Csv)
                emit(udbf::io::to_csv(rec), out_path);
            else
                emit(design_text(rec), out_path);
        } else if (cmd_analyze->parsed()) {
            auto filter = build_filter(analyze_args);
            double lo = sweep_min > 0.0 ? sweep_min : filter.omega_n / 100.0;
            double hi = sweep_max > 0.0 ? sweep_max : filter.omega_n * 100.0;
            if (!(hi > lo)) throw std::invalid_argument("sweep range is empty");
            auto rows = udbf::analyze_sweep(filter, udbf::log_spaced(lo, hi, points));
            udbf::io::Table table;
            table.columns = {"omega", "magnitude", "magnitude_db",
                             "phase_rad", "phase_delay_s", "group_delay_s"};
            for (const auto& r : rows)
                table.rows.push_back({r.omega, r.magnitude, r.magnitude_db, r.phase_rad,
                                      r.phase_delay_s, r.group_delay_s});
            emit(udbf::io::render(table, fmt), out_path);
        } else if (cmd_simulate->parsed()) {
            auto filter = build_filter(sim_args);
            double h = horizon > 0.0 ? horizon : udbf::default_horizon(filter);
            double step = dt > 0.0 ? dt : udbf::default_dt(filter);
            auto sim = (input_kind == "step") ? udbf::simulate_step(filter, h, step)
                                              : udbf::simulate_impulse(filter, h, step);
            udbf::io::Table table;
            table.columns = {"t", "y"};
            for (std::size_t i = 0; i < sim.t.size(); ++i)
                table.rows.push_back({sim.t[i], sim.y[i]});
            std::string text;
            if (input_kind == "step") {
                auto metrics = udbf::transient_metrics(sim);
                udbf::io::Report report;
                report.entries = {{"overshoot_pct", metrics.overshoot_pct},
                                  {"peak_time", metrics.peak_time},
                                  {"rise_time_10_90", metrics.rise_time_10_90},
                                  {"settling_time_2pct", metrics.settling_time_2pct},
                                  {"final_value", metrics.final_value}};
                if (fmt == udbf::io::OutputFormat::Json) {
                    nlohmann::ordered_json j;
                    j["metrics"] = nlohmann::ordered_json::parse(udbf::io::render(report, fmt));
                    j["table"] = nlohmann::ordered_json::parse(udbf::io::to_json(table));
                    text = j.dump(2) + "\n";
                } else {
                    text = udbf::io::render(report, fmt) + "\n" + udbf::io::render(table, fmt);
                }
            } else {
                text = udbf::io::render(table, fmt);
            }
            emit(text, out_path);
        } else if (cmd_digitize->parsed()) {
            auto filter = build_filter(digitize_args);
            auto iir = udbf::bilinear_transform(filter, fs, prewarp);
            double zeta = udbf::design_zeta(parse_kind(digitize_args.kind), digitize_args.n,
                                            digitize_args.zeta);
            auto rec = udbf::io::digital_record(digitize_args.kind, zeta, filter, iir);
            std::vector<double> moduli;
            for (const auto& p : udbf::digital_poles(iir)) moduli.push_back(std::abs(p));
            std::sort(moduli.begin(), moduli.end());
            if (fmt == udbf::io::OutputFormat::Json) {
                nlohmann::ordered_json j = udbf::io::record_json(rec);
                j["pole_moduli"] = nlohmann::ordered_json::array();
                for (double m : moduli) j["pole_moduli"].push_back(m);
                emit(j.dump(2) + "\n", out_path);
            } else if (fmt == udbf::io::OutputFormat::Csv) {
                std::string text = udbf::io::to_csv(rec);
                text += "pole_modulus\n";
                for (double m : moduli) text += udbf::io::format_double(m) + "\n";
                emit(text, out_path);
            } else {
                std::string text = design_text(rec);
                text += "sample_rate = " + udbf::io::format_double(fs) + "\n";
                text += "pole moduli:";
                for (double m : moduli) text += " " + udbf::io::format_double(m);
                text += "\n";
                emit(text, out_path);
            }
        } else if (cmd_compare->parsed()) {
            double wn = cmp_hz > 0.0 ? 2.0 * std::numbers::pi * cmp_hz : cmp_wn;
            double rate = cmp_fs > 0.0 ? cmp_fs : udbf::default_compare_fs(wn);
            double h = cmp_horizon > 0.0 ? cmp_horizon : 30.0 * cmp_n / wn;
            udbf::NoiseSpec noise{seed, sigma};
            auto result = udbf::compare_filters(cmp_n, wn, noise, rate, h);
            emit(udbf::render_compare_report(result, fmt), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "udbf: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
