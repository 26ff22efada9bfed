#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kacim {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Row-paired observations (x_j, y_j), j = 1..n.
struct PairedSample {
    Matrix x;  // n x d_x
    Matrix y;  // n x d_y

    PairedSample() = default;
    PairedSample(Matrix x_, Matrix y_);

    Eigen::Index n() const { return x.rows(); }
    Eigen::Index dx() const { return x.cols(); }
    Eigen::Index dy() const { return y.cols(); }
};

struct StandardizationStats {
    Vector mean;
    Vector std;                       // entries > 0 (degenerate columns recorded as 1)
    std::vector<bool> degenerate;     // column sample std fell below 1e-12
};

struct SplitSpec {
    double train = 0.48;
    double validation = 0.12;
    double test = 0.40;
    std::uint64_t seed = 0;
};

struct LabeledDataset {
    Matrix x;                 // n x d_x
    std::vector<int> labels;  // values in 0..n_classes-1
    int n_classes = 0;

    Eigen::Index n() const { return x.rows(); }
    Eigen::Index dx() const { return x.cols(); }
};

// Column-wise zero mean / unit variance, population-std convention (divide
// by n). Columns with std below 1e-12 are mean-centered only and flagged.
std::pair<Matrix, StandardizationStats> standardize(const Matrix& m);

Matrix apply_standardization(const Matrix& m, const StandardizationStats& st);

// Disjoint, exhaustive row partition; uniform permutation, no stratification.
std::tuple<LabeledDataset, LabeledDataset, LabeledDataset> split(const LabeledDataset& d,
                                                                 const SplitSpec& s);

// Index-level variant shared with PairedSample callers.
std::tuple<std::vector<int>, std::vector<int>, std::vector<int>> split_indices(int n,
                                                                               const SplitSpec& s);

Matrix one_hot(const std::vector<int>& labels, int n_classes);

LabeledDataset take_rows(const LabeledDataset& d, const std::vector<int>& rows);

// CSV: comma delimiter, optional single header row, '.' decimal separator.
// Errors carry row/column locations.
Matrix load_matrix_csv(const std::string& path);
LabeledDataset load_labeled_csv(const std::string& path, const std::string& label_column);

void write_matrix_csv(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header = {});

}  // namespace kacim
