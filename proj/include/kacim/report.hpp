#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kacim {

// Tabular report rows, written as RFC-4180 CSV.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<std::string> cells);
    std::string to_string() const;
    void write(const std::string& path) const;

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    static std::string num(double v);

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

// Command report: echoes the fully resolved configuration, carries the row
// table and the wall-clock duration. CSV stays byte-stable across reruns
// with the same flags; the duration lives in the JSON side only.
struct ExperimentReport {
    std::string command;
    nlohmann::json config;
    CsvTable rows;
    double duration_seconds = 0.0;

    // writes <prefix>.csv and <prefix>.json
    void write(const std::string& prefix) const;
};

struct SvgPoint {
    double x = 0.0;
    double y = 0.0;
    double yerr = 0.0;
};

struct SvgSeries {
    std::string label;
    std::vector<SvgPoint> points;
};

// Self-contained line chart with error bars; no external renderer.
void svg_line_chart(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series);

}  // namespace kacim
