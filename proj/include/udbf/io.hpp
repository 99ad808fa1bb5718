#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "udbf/damped_binomial.hpp"
#include "udbf/digital.hpp"

// Export/import of coefficient records and tabular results. Numbers are
// written with full round-trip precision (17 significant digits; JSON uses
// the library's shortest round-trip form) so a re-imported record reproduces
// the filter bit for bit. JSON objects keep a stable key order and CSV uses
// comma separators with LF line endings.

namespace udbf::io {

enum class OutputFormat { Text, Json, Csv };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format: " + name);
}

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ---------------------------------------------------------------------------
// Coefficient record: analog designs use sample_rate = 0, digital designs
// carry the digitization rate. zeta is NaN for the Butterworth family, whose
// damping is non-uniform.

struct CoefficientRecord {
    std::string kind;
    int n = 0;
    double zeta = 1.0;
    double omega_n = 1.0;
    double sample_rate = 0.0;  // 0 = analog prototype
    std::vector<double> b;
    std::vector<double> a;
};

inline CoefficientRecord analog_record(const std::string& kind, double zeta,
                                       const AnalogPolynomialFilter& f) {
    return {kind, f.n, zeta, f.omega_n, 0.0, {f.numerator()}, f.denom};
}

inline CoefficientRecord digital_record(const std::string& kind, double zeta,
                                        const AnalogPolynomialFilter& f, const DigitalIIR& iir) {
    return {kind, f.n, zeta, f.omega_n, iir.sample_rate, iir.b, iir.a};
}

inline DigitalIIR to_digital(const CoefficientRecord& rec) {
    if (rec.sample_rate <= 0.0)
        throw std::invalid_argument("record is not a digital design");
    return {rec.b, rec.a, rec.sample_rate};
}

inline AnalogPolynomialFilter to_analog(const CoefficientRecord& rec) {
    if (rec.sample_rate != 0.0)
        throw std::invalid_argument("record is not an analog design");
    return {rec.n, rec.omega_n, rec.a};
}

inline nlohmann::ordered_json record_json(const CoefficientRecord& rec) {
    nlohmann::ordered_json j;
    j["kind"] = rec.kind;
    j["n"] = rec.n;
    if (std::isnan(rec.zeta))
        j["zeta"] = nullptr;
    else
        j["zeta"] = rec.zeta;
    j["omega_n"] = rec.omega_n;
    j["sample_rate"] = rec.sample_rate;
    j["b"] = rec.b;
    j["a"] = rec.a;
    return j;
}

inline std::string to_json(const CoefficientRecord& rec) { return record_json(rec).dump(2) + "\n"; }

inline CoefficientRecord record_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CoefficientRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.zeta = j.at("zeta").is_null() ? std::nan("") : j.at("zeta").get<double>();
    rec.omega_n = j.at("omega_n").get<double>();
    rec.sample_rate = j.at("sample_rate").get<double>();
    rec.b = j.at("b").get<std::vector<double>>();
    rec.a = j.at("a").get<std::vector<double>>();
    return rec;
}

inline std::string to_csv(const CoefficientRecord& rec) {
    std::ostringstream out;
    out << "kind,n,zeta,omega_n,sample_rate\n";
    out << rec.kind << ',' << rec.n << ',' << format_double(rec.zeta) << ','
        << format_double(rec.omega_n) << ',' << format_double(rec.sample_rate) << '\n';
    out << "index,b,a\n";
    const std::size_t rows = std::max(rec.b.size(), rec.a.size());
    for (std::size_t i = 0; i < rows; ++i) {
        out << i << ',';
        if (i < rec.b.size()) out << format_double(rec.b[i]);
        out << ',';
        if (i < rec.a.size()) out << format_double(rec.a[i]);
        out << '\n';
    }
    return out.str();
}

inline CoefficientRecord record_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(s);
        while (std::getline(fs, field, ',')) fields.push_back(field);
        if (!s.empty() && s.back() == ',') fields.push_back("");
        return fields;
    };
    if (!std::getline(in, line) || line != "kind,n,zeta,omega_n,sample_rate")
        throw std::invalid_argument("coefficient CSV: bad header");
    if (!std::getline(in, line)) throw std::invalid_argument("coefficient CSV: missing data row");
    auto head = split(line);
    if (head.size() != 5) throw std::invalid_argument("coefficient CSV: bad data row");
    CoefficientRecord rec;
    rec.kind = head[0];
    rec.n = std::atoi(head[1].c_str());
    rec.zeta = std::strtod(head[2].c_str(), nullptr);
    rec.omega_n = std::strtod(head[3].c_str(), nullptr);
    rec.sample_rate = std::strtod(head[4].c_str(), nullptr);
    if (!std::getline(in, line) || line != "index,b,a")
        throw std::invalid_argument("coefficient CSV: bad coefficient header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() < 3) throw std::invalid_argument("coefficient CSV: bad coefficient row");
        if (!fields[1].empty()) rec.b.push_back(std::strtod(fields[1].c_str(), nullptr));
        if (!fields[2].empty()) rec.a.push_back(std::strtod(fields[2].c_str(), nullptr));
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Generic numeric table.

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_double(row[c]) << (c + 1 < row.size() ? "," : "");
        out << '\n';
    }
    return out.str();
}

inline std::string to_json(const Table& table) {
    nlohmann::ordered_json j;
    j["columns"] = table.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

inline std::string to_text(const Table& table) {
    std::ostringstream out;
    for (const auto& col : table.columns) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%-24s", col.c_str());
        out << buf;
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (double x : row) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%-24.17g", x);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render(const Table& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return to_csv(table);
        case OutputFormat::Json: return to_json(table);
        case OutputFormat::Text: return to_text(table);
    }
    throw std::invalid_argument("unknown output format");
}

// Key-value report (metric records and the like).
struct Report {
    std::vector<std::pair<std::string, double>> entries;
};

inline std::string render(const Report& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        for (const auto& [key, value] : report.entries) j[key] = value;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "key,value\n";
        for (const auto& [key, value] : report.entries)
            out << key << ',' << format_double(value) << '\n';
    } else {
        for (const auto& [key, value] : report.entries)
            out << key << " = " << format_double(value) << '\n';
    }
    return out.str();
}

}  // namespace udbf::io
