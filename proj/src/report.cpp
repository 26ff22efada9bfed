#include "kacim/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kacim {

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string CsvTable::num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) {
        throw std::invalid_argument("CsvTable: row arity " + std::to_string(cells.size()) +
                                    " != " + std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) os << ',';
        os << csv_quote(columns_[c]);
    }
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << csv_quote(row[c]);
        }
        os << '\n';
    }
    return os.str();
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << to_string();
}

void ExperimentReport::write(const std::string& prefix) const {
    rows.write(prefix + ".csv");
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config;
    j["rows_file"] = prefix + ".csv";
    j["row_count"] = rows.row_count();
    j["duration_seconds"] = duration_seconds;
    std::ofstream out(prefix + ".json");
    if (!out) throw std::invalid_argument("cannot write file: " + prefix + ".json");
    out << j.dump(2) << '\n';
}

void svg_line_chart(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series) {
    constexpr int width = 720, height = 480;
    constexpr int ml = 70, mr = 30, mt = 50, mb = 60;
    constexpr int pw = width - ml - mr, ph = height - mt - mb;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            const double lo = p.y - p.yerr, hi = p.y + p.yerr;
            if (first) {
                xmin = xmax = p.x;
                ymin = lo;
                ymax = hi;
                first = false;
            } else {
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymin = std::min(ymin, lo);
                ymax = std::max(ymax, hi);
            }
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    const auto sy = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << title << "</text>\n";
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 14
       << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << mt + ph / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " << mt + ph / 2
       << ")\">" << y_label << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"#888\"/>\n";

    // axis ticks
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        os << "<text x=\"" << sx(xv) << "\" y=\"" << mt + ph + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << CsvTable::num(xv) << "</text>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << sy(yv) + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << CsvTable::num(yv) << "</text>\n";
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = colors[si % 6];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto& p : series[si].points) os << sx(p.x) << ',' << sy(p.y) << ' ';
        os << "\"/>\n";
        for (const auto& p : series[si].points) {
            if (p.yerr > 0) {
                os << "<line x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y - p.yerr) << "\" x2=\""
                   << sx(p.x) << "\" y2=\"" << sy(p.y + p.yerr) << "\" stroke=\"" << color
                   << "\" stroke-width=\"1\"/>\n";
            }
            os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"2.5\" fill=\""
               << color << "\"/>\n";
        }
        os << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 18 + 16 * static_cast<int>(si)
           << "\" font-size=\"12\" fill=\"" << color << "\">" << series[si].label << "</text>\n";
    }
    os << "</svg>\n";

    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << os.str();
}

}  // namespace kacim
