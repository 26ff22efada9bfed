#include "kacim/simgen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kacim/rng.hpp"

namespace kacim {

NoiseFamily noise_family_from_string(const std::string& name) {
    if (name == "gaussian") return NoiseFamily::Gaussian;
    if (name == "uniform") return NoiseFamily::Uniform;
    if (name == "laplace") return NoiseFamily::Laplace;
    if (name == "lognormal") return NoiseFamily::LogNormal;
    throw std::invalid_argument("unknown noise family: " + name);
}

std::string to_string(NoiseFamily f) {
    switch (f) {
        case NoiseFamily::Gaussian: return "gaussian";
        case NoiseFamily::Uniform: return "uniform";
        case NoiseFamily::Laplace: return "laplace";
        case NoiseFamily::LogNormal: return "lognormal";
    }
    return "?";
}

namespace {

void check_spec(const GeneratorSpec& spec) {
    if (spec.n < 1 || spec.d_x < 1 || spec.d_y < 1) {
        throw std::invalid_argument("GeneratorSpec: n and dimensions must be >= 1");
    }
    if (!(spec.noise_scale >= 0.0) || !std::isfinite(spec.noise_scale)) {
        throw std::invalid_argument("GeneratorSpec: noise_scale must be finite and >= 0");
    }
}

Matrix normal_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.normal();
    return m;
}

double draw_noise(Rng& rng, NoiseFamily f) {
    switch (f) {
        case NoiseFamily::Gaussian: return rng.normal();
        case NoiseFamily::Uniform: return rng.uniform_unit();
        case NoiseFamily::Laplace: return rng.laplace_unit();
        case NoiseFamily::LogNormal: return rng.lognormal_unit();
    }
    return 0.0;
}

}  // namespace

PairedSample gen_independent(const GeneratorSpec& spec) {
    check_spec(spec);
    Rng rx = Rng::stream(spec.seed, "x");
    Rng ry = Rng::stream(spec.seed, "y");
    return PairedSample(normal_matrix(rx, spec.n, spec.d_x), normal_matrix(ry, spec.n, spec.d_y));
}

std::pair<PairedSample, Matrix> gen_additive(const GeneratorSpec& spec) {
    check_spec(spec);
    Rng ra = Rng::stream(spec.seed, "A");
    Matrix a(spec.d_y, spec.d_x);
    for (Eigen::Index i = 0; i < spec.d_y; ++i)
        for (Eigen::Index j = 0; j < spec.d_x; ++j) a(i, j) = ra.uniform();
    // Rows are rescaled to unit norm so each coordinate of Ax keeps unit
    // variance regardless of d_x. Raw uniform rows grow like sqrt(d_x), the
    // sin/cos phases then wash out and the dependence signal vanishes with
    // dimension, which contradicts the intended dimension invariance of the
    // benchmark.
    for (Eigen::Index i = 0; i < spec.d_y; ++i) {
        const double norm = a.row(i).norm();
        if (norm > 0) a.row(i) /= norm;
    }

    Rng rx = Rng::stream(spec.seed, "x");
    Matrix x = normal_matrix(rx, spec.n, spec.d_x);

    Rng re = Rng::stream(spec.seed, "eps");
    const Matrix proj = x * a.transpose();  // n x d_y, row j holds A x_j
    Matrix y(spec.n, spec.d_y);
    for (Eigen::Index i = 0; i < spec.n; ++i) {
        for (Eigen::Index j = 0; j < spec.d_y; ++j) {
            const double t = proj(i, j);
            y(i, j) = std::sin(t) + std::cos(t) + spec.noise_scale * draw_noise(re, spec.noise_family);
        }
    }
    return {PairedSample(std::move(x), std::move(y)), a};
}

PairedSample gen_gaussian_pair(const GaussianSpec& g, int n, std::uint64_t seed) {
    validate(g);
    if (n < 1) throw std::invalid_argument("gen_gaussian_pair: n must be >= 1");
    const Eigen::Index dx = g.sigma_x.rows(), dy = g.sigma_y.rows();
    Matrix joint(dx + dy, dx + dy);
    joint.topLeftCorner(dx, dx) = g.sigma_x;
    joint.topRightCorner(dx, dy) = g.sigma_xy;
    joint.bottomLeftCorner(dy, dx) = g.sigma_xy.transpose();
    joint.bottomRightCorner(dy, dy) = g.sigma_y;
    Eigen::LLT<Matrix> llt(joint);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("gen_gaussian_pair: joint covariance Cholesky failed");
    }
    const Matrix l = llt.matrixL();
    Rng rng = Rng::stream(seed, "gaussian_pair");
    Matrix z = normal_matrix(rng, n, static_cast<int>(dx + dy));
    const Matrix rows = z * l.transpose();
    return PairedSample(rows.leftCols(dx), rows.rightCols(dy));
}

LabeledDataset gen_classification(int n, int d_x, int n_classes, int d_informative,
                                  std::uint64_t seed) {
    if (n < n_classes || n_classes < 2) {
        throw std::invalid_argument("gen_classification: need n >= n_classes >= 2");
    }
    if (d_informative < 0 || d_informative > d_x) {
        throw std::invalid_argument("gen_classification: d_informative out of range");
    }
    if (d_informative > 0 && d_informative < n_classes) {
        throw std::invalid_argument(
            "gen_classification: d_informative must be 0 or >= n_classes");
    }

    // Means sqrt(2) * e_c give pairwise distance exactly 2.0.
    Matrix means = Matrix::Zero(n_classes, d_x);
    if (d_informative > 0) {
        const double scale = std::numbers::sqrt2;
        for (int c = 0; c < n_classes; ++c) means(c, c) = scale;
    }

    Rng rng = Rng::stream(seed, "class_noise");
    LabeledDataset d;
    d.x = Matrix(n, d_x);
    d.labels.resize(static_cast<std::size_t>(n));
    d.n_classes = n_classes;
    for (int i = 0; i < n; ++i) {
        const int c = i % n_classes;
        for (int j = 0; j < d_x; ++j) d.x(i, j) = means(c, j) + rng.normal();
        d.labels[static_cast<std::size_t>(i)] = c;
    }
    // shuffle rows so label order carries no structure
    const auto perm = Rng::stream(seed, "class_shuffle").permutation(n);
    LabeledDataset out;
    out.x = Matrix(n, d_x);
    out.labels.resize(static_cast<std::size_t>(n));
    out.n_classes = n_classes;
    for (int i = 0; i < n; ++i) {
        out.x.row(i) = d.x.row(perm[static_cast<std::size_t>(i)]);
        out.labels[static_cast<std::size_t>(i)] =
            d.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }
    return out;
}

}  // namespace kacim
