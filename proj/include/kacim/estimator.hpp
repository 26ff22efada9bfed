#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kacim/ecf.hpp"

namespace kacim {

struct EstimatorConfig {
    int iterations = 1000;
    int batch_size = 1024;
    double learning_rate = 0.007;
    double weight_decay = 0.01;
    bool unit_sphere = true;
    std::optional<SmoothingSpec> smoothing;
    std::optional<double> freq_norm_bound;  // T; opt-in clip on ||(alpha, beta)||
    std::uint64_t seed = 0;
    bool standardize_batches = true;
};

struct EstimateResult {
    double kappa_hat = 0.0;  // equals full_sample_value
    FrequencyPoint argmax;
    std::vector<std::pair<int, double>> trace;  // (iteration, batch |Delta_n|)
    double full_sample_value = 0.0;
    bool zero_norm_flagged = false;  // a unit-sphere projection hit a near-zero vector
};

struct GaussianSpec {
    Matrix sigma_x;
    Matrix sigma_y;
    Matrix sigma_xy;
};

void validate(const GaussianSpec& g);

// Adaptive-moment ascent with decoupled weight decay. Decay rates 0.9/0.999,
// floor 1e-8, bias correction; shrinkage params *= (1 - lr*wd) is applied
// before the adaptive step.
struct AdamState {
    Vector m;
    Vector v;
    long step = 0;
};

void optimizer_step(Vector& params, const Vector& grad, AdamState& state, double lr, double wd);

// v / ||v||, or the first basis vector (flagged) when ||v|| < 1e-12.
Vector project_unit_sphere(const Vector& v, bool* flagged = nullptr);

EstimateResult estimate(const PairedSample& s, const EstimatorConfig& cfg);

// Same loop ascending the smoothed objective; cfg.smoothing must be set.
EstimateResult estimate_smoothed(const PairedSample& s, const EstimatorConfig& cfg);

// Sorted estimator values under seeded random re-pairings of y.
std::vector<double> permutation_null(const PairedSample& s, const EstimatorConfig& cfg,
                                     int n_perm);

struct CanonicalPair {
    Vector alpha_dir;
    Vector beta_dir;
    double rho = 0.0;
};

CanonicalPair first_canonical_pair(const GaussianSpec& g);

// Closed-form population value for zero-mean Gaussian pairs: scale search
// along the first canonical directions (coarse grid + local refinement).
double gaussian_kacim(const GaussianSpec& g);

}  // namespace kacim
