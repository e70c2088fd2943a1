#include "hardy/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json out;
    out["schema_version"] = kReportSchemaVersion;
    out["config"] = config;
    out["rows"] = rows;
    out["fits"] = fits;
    out["environment"] = environment;
    return out;
}

ReportFormat parse_format(const std::string& text) {
    if (text == "json") return ReportFormat::json;
    if (text == "csv") return ReportFormat::csv;
    throw ParameterError("unknown report format '" + text + "' (want json or csv)");
}

namespace {

std::string csv_cell(const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

void write_csv(std::ostream& out, const ExperimentReport& report) {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        out << (c ? "," : "") << report.columns[c];
    }
    out << "\n";
    for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
            out << (c ? "," : "");
            const auto it = row.find(report.columns[c]);
            if (it != row.end()) out << csv_cell(*it);
        }
        out << "\n";
    }
    for (const auto& [key, value] : report.fits.items()) {
        out << "# " << key << " = " << value.dump() << "\n";
    }
}

}  // namespace

void emit_report(const ExperimentReport& report, const std::string& path, ReportFormat format) {
    if (report.rows.empty()) throw ParameterError("refusing to emit a report with no rows");

    std::ostringstream body;
    if (format == ReportFormat::json) {
        body << report.to_json().dump(2) << "\n";
    } else {
        write_csv(body, report);
    }

    if (path == "-") {
        std::cout << body.str();
        if (!std::cout) throw IoError("failed writing report to stdout");
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open report path: " + path);
    out << body.str();
    out.flush();
    if (!out) throw IoError("failed writing report to " + path);
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw FitError("power-law fit needs at least 3 points");
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    const double count = static_cast<double>(points.size());
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) throw FitError("power-law fit needs positive samples");
        const double lx = std::log(x);
        const double ly = std::log(y);
        logs.emplace_back(lx, ly);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = count * sxx - sx * sx;
    if (std::abs(denom) < 1e-12 * (1.0 + sxx * count)) {
        throw FitError("power-law fit is degenerate: x values coincide");
    }
    PowerLawFit fit;
    fit.slope = (count * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / count;
    double rss = 0.0;
    for (const auto& [lx, ly] : logs) {
        const double e = ly - (fit.intercept + fit.slope * lx);
        rss += e * e;
    }
    fit.residual = std::sqrt(rss / count);
    return fit;
}

}  // namespace hardy
