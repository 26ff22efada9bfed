#pragma once

#include <complex>

#include "kacim/data.hpp"
#include "kacim/ecf.hpp"
#include "kacim/rng.hpp"

namespace kacim::testing {

// Reference evaluation of Delta_n with std::complex arithmetic, kept naive
// on purpose so the production implementation is checked against an
// independent formulation.
inline std::complex<double> delta_ref(const Matrix& x, const Matrix& y, const Vector& alpha,
                                      const Vector& beta) {
    const std::complex<double> i(0.0, 1.0);
    const Eigen::Index n = x.rows();
    std::complex<double> joint(0.0, 0.0), mx(0.0, 0.0), my(0.0, 0.0);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double px = alpha.dot(x.row(j));
        const double py = beta.dot(y.row(j));
        joint += std::exp(i * (px + py));
        mx += std::exp(i * px);
        my += std::exp(i * py);
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    return joint * inv_n - (mx * inv_n) * (my * inv_n);
}

inline Matrix random_matrix(Rng& rng, int rows, int cols, double lo = -2.0, double hi = 2.0) {
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
    return m;
}

inline Vector random_vector(Rng& rng, int n, double lo = -2.0, double hi = 2.0) {
    Vector v(n);
    for (Eigen::Index j = 0; j < n; ++j) v[j] = rng.uniform(lo, hi);
    return v;
}

}  // namespace kacim::testing
