#pragma once

#include <cstdint>
#include <utility>

#include "kacim/data.hpp"
#include "kacim/estimator.hpp"

namespace kacim {

enum class NoiseFamily { Gaussian, Uniform, Laplace, LogNormal };

NoiseFamily noise_family_from_string(const std::string& name);
std::string to_string(NoiseFamily f);

struct GeneratorSpec {
    int n = 4096;
    int d_x = 32;
    int d_y = 32;
    double noise_scale = 0.2;  // lambda
    NoiseFamily noise_family = NoiseFamily::Gaussian;
    std::uint64_t seed = 0;
};

// x and y i.i.d. standard normal from independent substreams.
PairedSample gen_independent(const GeneratorSpec& spec);

// y = sin(Ax) + cos(Ax) + lambda * eps, A d_y x d_x with uniform [0,1)
// entries drawn once per seed and rows rescaled to unit norm (keeps the
// signal strength dimension-invariant); eps standardized to zero mean /
// unit variance so lambda is comparable across noise families.
std::pair<PairedSample, Matrix> gen_additive(const GeneratorSpec& spec);

// Rows of the joint zero-mean Gaussian via Cholesky of the block covariance.
PairedSample gen_gaussian_pair(const GaussianSpec& g, int n, std::uint64_t seed);

// Class-conditional Gaussians: class means sit on the first d_informative
// coordinates with pairwise separation 2.0; the rest is pure noise. Classes
// balanced up to rounding.
LabeledDataset gen_classification(int n, int d_x, int n_classes, int d_informative,
                                  std::uint64_t seed);

}  // namespace kacim
