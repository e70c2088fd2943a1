#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hardy {

inline constexpr int kReportSchemaVersion = 1;

/// One experiment's output: echoed config, measured rows, fitted summary
/// values, and the environment block (grids/tolerances; nothing volatile, so
/// identical configs serialize byte-identically).
struct ExperimentReport {
    nlohmann::json config;
    std::vector<std::string> columns;       // CSV column order
    std::vector<nlohmann::json> rows;       // objects keyed by column name
    nlohmann::json fits;
    nlohmann::json environment;

    nlohmann::json to_json() const;
};

enum class ReportFormat { json, csv };

ReportFormat parse_format(const std::string& text);

/// Writes the report; path "-" means stdout. JSON is a single object, CSV is
/// header + rows with fits appended as `#` comment lines. Rejects empty rows
/// before touching the filesystem.
void emit_report(const ExperimentReport& report, const std::string& path, ReportFormat format);

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;  // of log y vs log x
    double residual = 0.0;   // rms in log space
};

/// Least squares for y = e^intercept * x^slope on (log x, log y).
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace hardy
