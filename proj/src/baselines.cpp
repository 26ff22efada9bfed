#include "kacim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace kacim {

Matrix pairwise_distances(const Matrix& m) {
    const Eigen::Index n = m.rows();
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double dist = (m.row(i) - m.row(j)).norm();
            d(i, j) = dist;
            d(j, i) = dist;
        }
    }
    return d;
}

double median_pairwise_distance(const Matrix& m) {
    const Eigen::Index n = m.rows();
    if (n < 2) throw std::invalid_argument("median_pairwise_distance: need at least 2 rows");
    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            dists.push_back((m.row(i) - m.row(j)).norm());
        }
    }
    std::sort(dists.begin(), dists.end());
    const std::size_t k = dists.size();
    return (k % 2 == 1) ? dists[k / 2] : 0.5 * (dists[k / 2 - 1] + dists[k / 2]);
}

namespace {

void check_rows(const Matrix& x, const Matrix& y, Eigen::Index min_n, const char* who) {
    if (x.rows() != y.rows()) {
        throw std::invalid_argument(std::string(who) + ": row-count mismatch");
    }
    if (x.rows() < min_n) {
        throw std::invalid_argument(std::string(who) + ": need at least " +
                                    std::to_string(min_n) + " rows");
    }
}

Matrix double_center(const Matrix& d) {
    const double n = static_cast<double>(d.rows());
    const Vector row_means = d.rowwise().mean();
    const double grand = d.mean();
    Matrix a = d;
    a.colwise() -= row_means;
    a.rowwise() -= row_means.transpose();
    a.array() += grand;
    (void)n;
    return a;
}

Matrix u_center(const Matrix& d) {
    const Eigen::Index n = d.rows();
    const Vector row_sums = d.rowwise().sum();
    const double total = d.sum();
    Matrix a = Matrix::Zero(n, n);
    const double c1 = 1.0 / static_cast<double>(n - 2);
    const double c2 = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            a(i, j) = d(i, j) - c1 * row_sums[i] - c1 * row_sums[j] + c2 * total;
        }
    }
    return a;
}

}  // namespace

double dcor_biased(const Matrix& x, const Matrix& y) {
    check_rows(x, y, 2, "dcor_biased");
    const Matrix a = double_center(pairwise_distances(x));
    const Matrix b = double_center(pairwise_distances(y));
    const double vxy = a.cwiseProduct(b).mean();
    const double vxx = a.cwiseProduct(a).mean();
    const double vyy = b.cwiseProduct(b).mean();
    if (vxx * vyy < 1e-24) return 0.0;
    const double r2 = std::max(0.0, vxy) / std::sqrt(vxx * vyy);
    return std::min(1.0, std::sqrt(r2));
}

double dcor_unbiased(const Matrix& x, const Matrix& y) {
    check_rows(x, y, 4, "dcor_unbiased");
    const Eigen::Index n = x.rows();
    const Matrix a = u_center(pairwise_distances(x));
    const Matrix b = u_center(pairwise_distances(y));
    const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n - 3));
    const double vxy = a.cwiseProduct(b).sum() * scale;
    const double vxx = a.cwiseProduct(a).sum() * scale;
    const double vyy = b.cwiseProduct(b).sum() * scale;
    if (vxx <= 0.0 || vyy <= 0.0) return 0.0;
    return vxy / std::sqrt(vxx * vyy);
}

double hsic_gaussian(const Matrix& x, const Matrix& y) {
    check_rows(x, y, 2, "hsic_gaussian");
    const Eigen::Index n = x.rows();

    const auto gram = [n](const Matrix& m) {
        const double med = median_pairwise_distance(m);
        const double sigma = med > 0.0 ? med : 1.0;
        const double scale = -0.5 / (sigma * sigma);
        Matrix k(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            k(i, i) = 1.0;
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double v = std::exp(scale * (m.row(i) - m.row(j)).squaredNorm());
                k(i, j) = v;
                k(j, i) = v;
            }
        }
        return k;
    };

    const Matrix k = gram(x);
    const Matrix l = gram(y);
    const Matrix h = Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
    const Matrix khlh = k * h * l * h;
    return khlh.trace() / (static_cast<double>(n) * static_cast<double>(n));
}

}  // namespace kacim
