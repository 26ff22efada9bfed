#pragma once

#include <map>
#include <string>
#include <vector>

#include "kacim/data.hpp"
#include "kacim/ecf.hpp"

namespace kacim {

// Linear feature extractor W (k x d_x) with its co-trained frequency pair.
struct ProjectionModel {
    Matrix w;
    FrequencyPoint freq;
    int k = 0;
    bool converged = false;              // row Gram within 0.05 of identity
    StandardizationStats input_stats;    // fitted on the training inputs
};

struct FxConfig {
    int iterations = 250;
    double learning_rate = 0.007;
    double ortho_lambda = 1.0;
    int batch_size = 1024;
    double weight_decay = 0.01;
    std::uint64_t seed = 0;
    std::vector<int> dimension_grid;  // empty -> derived from d_x
};

enum class FxMeasure { KacIM, Hsic, DCor };

FxMeasure fx_measure_from_string(const std::string& name);

struct FxObjective {
    double value = 0.0;  // |Delta_n| - lambda * ||W W^T - I||_F^2
    Matrix grad_w;
    Vector grad_alpha;
    Vector grad_beta;
};

// Dependence objective with the row-Gram orthogonality penalty. Projected
// features W x are standardized with `wx_stats` when given; the stats are
// treated as constants by all gradients. With wx_stats == nullptr the
// features enter unnormalized.
FxObjective fx_objective(const Matrix& w, const FrequencyPoint& freq, const PairedSample& batch,
                         double ortho_lambda, const StandardizationStats* wx_stats = nullptr);

// Value and gradient of a dependence measure with respect to the feature
// matrix (bandwidths and centering treated as constants). Used by the HSIC
// and dCor extractor variants; exposed for gradient checks.
struct MeasureEval {
    double value = 0.0;
    Matrix d_features;
};

MeasureEval fx_measure_value_grad(FxMeasure measure, const Matrix& features, const Matrix& y);

// Joint gradient ascent on (W, alpha, beta) (or W alone for the HSIC / dCor
// measures), batch standardization per iteration, unit-sphere projection of
// the frequency pair.
ProjectionModel train_feature_extractor(const LabeledDataset& train, int k, const FxConfig& cfg,
                                        FxMeasure measure = FxMeasure::KacIM);

// f(x) = W x on standardized inputs, using the stats fitted at training time.
Matrix extract_features(const ProjectionModel& model, const Matrix& x);

struct LogisticModel {
    Matrix w;  // n_classes x d
    Vector b;
    int n_classes = 0;
};

// Multinomial logistic regression, full-batch gradient descent with fixed
// step 0.1, L2 penalty, 500 iterations by default.
LogisticModel logistic_fit(const Matrix& x, const std::vector<int>& labels, int n_classes,
                           double l2 = 1e-4, int max_iter = 500);

double logistic_accuracy(const LogisticModel& model, const Matrix& x,
                         const std::vector<int>& labels);

// {10, 10 + ceil(0.1 d_x), ...} up to d_x.
std::vector<int> dimension_grid(int d_x);

struct SweepResult {
    std::string baseline;
    int selected_k = 0;
    double validation_accuracy = 0.0;
    double test_accuracy = 0.0;
    std::vector<std::pair<int, double>> validation_curve;  // (k, accuracy)
};

// Train/validation/test protocol: per k and baseline, fit the extractor on
// the training split, pick k by validation accuracy (ties -> smaller k),
// report test accuracy.
std::vector<SweepResult> dimension_sweep(const LabeledDataset& dataset,
                                         const std::vector<std::string>& baselines,
                                         const FxConfig& cfg, const SplitSpec& split_spec);

enum class WilcoxonAlternative { Greater, TwoSided };

// Exact null distribution (dynamic programming over rank sums) for r <= 30
// with untied |differences|; normal approximation with continuity correction
// otherwise. Zero differences are dropped.
double wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                            WilcoxonAlternative alternative);

struct ComparisonTable {
    // (dataset, baseline) -> per-run test accuracies
    std::map<std::pair<std::string, std::string>, std::vector<double>> cells;

    std::vector<std::string> dataset_names() const;
    std::vector<std::string> baseline_names() const;
};

// RS(b): significant one-sided wins over every rival baseline across
// datasets; the RAW baseline is excluded from pairwise credit.
std::map<std::string, int> ranking_score(const ComparisonTable& t, double p_threshold);

}  // namespace kacim
