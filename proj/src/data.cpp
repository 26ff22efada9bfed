#include "kacim/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "kacim/rng.hpp"

namespace kacim {

PairedSample::PairedSample(Matrix x_, Matrix y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.rows() != y.rows()) {
        throw std::invalid_argument("PairedSample: x has " + std::to_string(x.rows()) +
                                    " rows, y has " + std::to_string(y.rows()));
    }
    if (x.rows() < 1) throw std::invalid_argument("PairedSample: empty sample");
    if (!x.allFinite() || !y.allFinite()) {
        throw std::invalid_argument("PairedSample: non-finite entries");
    }
}

std::pair<Matrix, StandardizationStats> standardize(const Matrix& m) {
    const auto n = m.rows();
    const auto d = m.cols();
    if (n < 1) throw std::invalid_argument("standardize: empty matrix");

    StandardizationStats st;
    st.mean = m.colwise().mean();
    st.std = Vector(d);
    st.degenerate.assign(static_cast<std::size_t>(d), false);
    for (Eigen::Index c = 0; c < d; ++c) {
        const double var = (m.col(c).array() - st.mean[c]).square().sum() / static_cast<double>(n);
        const double sd = std::sqrt(var);
        if (sd < 1e-12) {
            st.std[c] = 1.0;
            st.degenerate[static_cast<std::size_t>(c)] = true;
        } else {
            st.std[c] = sd;
        }
    }
    return {apply_standardization(m, st), st};
}

Matrix apply_standardization(const Matrix& m, const StandardizationStats& st) {
    return (m.rowwise() - st.mean.transpose()).array().rowwise() /
           st.std.transpose().array();
}

std::tuple<std::vector<int>, std::vector<int>, std::vector<int>> split_indices(int n,
                                                                               const SplitSpec& s) {
    const double sum = s.train + s.validation + s.test;
    if (std::abs(sum - 1.0) > 1e-9 || s.train <= 0 || s.validation <= 0 || s.test <= 0) {
        throw std::invalid_argument("split: proportions must be positive and sum to 1");
    }
    const int n_train = static_cast<int>(std::floor(s.train * n));
    const int n_val = static_cast<int>(std::floor(s.validation * n));
    const int n_test = n - n_train - n_val;
    if (n_train < 1 || n_val < 1 || n_test < 1) {
        throw std::invalid_argument("split: n = " + std::to_string(n) +
                                    " too small for three non-empty parts");
    }
    auto perm = Rng::stream(s.seed, "split").permutation(n);
    std::vector<int> tr(perm.begin(), perm.begin() + n_train);
    std::vector<int> va(perm.begin() + n_train, perm.begin() + n_train + n_val);
    std::vector<int> te(perm.begin() + n_train + n_val, perm.end());
    return {std::move(tr), std::move(va), std::move(te)};
}

LabeledDataset take_rows(const LabeledDataset& d, const std::vector<int>& rows) {
    LabeledDataset out;
    out.x = Matrix(static_cast<Eigen::Index>(rows.size()), d.x.cols());
    out.labels.resize(rows.size());
    out.n_classes = d.n_classes;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.x.row(static_cast<Eigen::Index>(i)) = d.x.row(rows[i]);
        out.labels[i] = d.labels[static_cast<std::size_t>(rows[i])];
    }
    return out;
}

std::tuple<LabeledDataset, LabeledDataset, LabeledDataset> split(const LabeledDataset& d,
                                                                 const SplitSpec& s) {
    auto [tr, va, te] = split_indices(static_cast<int>(d.n()), s);
    return {take_rows(d, tr), take_rows(d, va), take_rows(d, te)};
}

Matrix one_hot(const std::vector<int>& labels, int n_classes) {
    if (n_classes < 2) throw std::invalid_argument("one_hot: n_classes must be >= 2");
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), n_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= n_classes) {
            throw std::invalid_argument("one_hot: label " + std::to_string(labels[i]) +
                                        " out of range at row " + std::to_string(i));
        }
        out(static_cast<Eigen::Index>(i), labels[i]) = 1.0;
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos == s.size() && std::isfinite(out);
    } catch (...) {
        return false;
    }
}

struct RawCsv {
    std::vector<std::string> header;  // empty when no header row
    std::vector<std::vector<std::string>> rows;
};

RawCsv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    RawCsv out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (first) {
            first = false;
            // header row: any cell that does not parse as a number
            double tmp;
            bool numeric = true;
            for (const auto& c : cells) {
                if (!parse_double(c, tmp)) {
                    numeric = false;
                    break;
                }
            }
            if (!numeric) {
                out.header = cells;
                continue;
            }
        }
        out.rows.push_back(std::move(cells));
    }
    if (out.rows.empty()) throw std::invalid_argument("empty CSV file: " + path);
    return out;
}

}  // namespace

Matrix load_matrix_csv(const std::string& path) {
    auto raw = read_csv(path);
    const std::size_t width = raw.header.empty() ? raw.rows[0].size() : raw.header.size();
    Matrix m(static_cast<Eigen::Index>(raw.rows.size()), static_cast<Eigen::Index>(width));
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        if (raw.rows[r].size() != width) {
            throw std::invalid_argument(path + ": row " + std::to_string(r) + " has " +
                                        std::to_string(raw.rows[r].size()) + " cells, expected " +
                                        std::to_string(width));
        }
        for (std::size_t c = 0; c < width; ++c) {
            double v;
            if (!parse_double(raw.rows[r][c], v)) {
                throw std::invalid_argument(path + ": non-numeric cell at row " +
                                            std::to_string(r) + ", column " + std::to_string(c));
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return m;
}

LabeledDataset load_labeled_csv(const std::string& path, const std::string& label_column) {
    auto raw = read_csv(path);
    if (raw.header.empty()) {
        throw std::invalid_argument(path + ": a header row is required to locate label column '" +
                                    label_column + "'");
    }
    const auto it = std::find(raw.header.begin(), raw.header.end(), label_column);
    if (it == raw.header.end()) {
        throw std::invalid_argument(path + ": no column named '" + label_column + "'");
    }
    const std::size_t label_idx = static_cast<std::size_t>(it - raw.header.begin());
    const std::size_t width = raw.header.size();

    LabeledDataset d;
    d.x = Matrix(static_cast<Eigen::Index>(raw.rows.size()),
                 static_cast<Eigen::Index>(width - 1));
    std::unordered_map<std::string, int> classes;  // first-appearance encoding
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        if (raw.rows[r].size() != width) {
            throw std::invalid_argument(path + ": row " + std::to_string(r) + " has " +
                                        std::to_string(raw.rows[r].size()) + " cells, expected " +
                                        std::to_string(width));
        }
        Eigen::Index fc = 0;
        for (std::size_t c = 0; c < width; ++c) {
            if (c == label_idx) continue;
            double v;
            if (!parse_double(raw.rows[r][c], v)) {
                throw std::invalid_argument(path + ": non-numeric cell at row " +
                                            std::to_string(r) + ", column " + std::to_string(c));
            }
            d.x(static_cast<Eigen::Index>(r), fc++) = v;
        }
        const auto& lbl = raw.rows[r][label_idx];
        auto [pos, inserted] = classes.emplace(lbl, static_cast<int>(classes.size()));
        (void)inserted;
        d.labels.push_back(pos->second);
    }
    d.n_classes = static_cast<int>(classes.size());
    if (d.n_classes < 2) throw std::invalid_argument(path + ": fewer than 2 classes");
    return d;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_matrix_csv(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out.precision(17);
    if (!header.empty()) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c) out << ',';
            out << csv_quote(header[c]);
        }
        out << '\n';
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << m(r, c);
        }
        out << '\n';
    }
}

}  // namespace kacim
