#pragma once

#include "kacim/data.hpp"

namespace kacim {

// Euclidean pairwise distances between rows.
Matrix pairwise_distances(const Matrix& m);

// Median over the n(n-1)/2 upper-triangle distances, zeros included; even
// counts take the mean of the two central order statistics.
double median_pairwise_distance(const Matrix& m);

// Double-centered (biased) distance correlation, in [0, 1].
double dcor_biased(const Matrix& x, const Matrix& y);

// U-centered (bias-corrected) distance correlation; may be negative.
double dcor_unbiased(const Matrix& x, const Matrix& y);

// Biased HSIC estimator (1/n^2) Tr(K H L H) with Gaussian kernels; the scale
// of each block is its median pairwise distance.
double hsic_gaussian(const Matrix& x, const Matrix& y);

}  // namespace kacim
