#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kacim/baselines.hpp"
#include "kacim/ecf.hpp"
#include "kacim/estimator.hpp"
#include "kacim/fx.hpp"
#include "kacim/simgen.hpp"

namespace py = pybind11;
using namespace kacim;

namespace {

EstimatorConfig make_config(int iterations, int batch_size, double learning_rate,
                            double weight_decay, bool unit_sphere, double smoothing_h,
                            std::uint64_t seed, bool standardize_batches) {
    EstimatorConfig cfg;
    cfg.iterations = iterations;
    cfg.batch_size = batch_size;
    cfg.learning_rate = learning_rate;
    cfg.weight_decay = weight_decay;
    cfg.unit_sphere = unit_sphere;
    cfg.seed = seed;
    cfg.standardize_batches = standardize_batches;
    if (smoothing_h > 0.0) cfg.smoothing = SmoothingSpec{smoothing_h, SmoothingKernel::Gaussian};
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_kacim, m) {
    m.doc() = "Kac independence measure toolkit";

    py::class_<EstimateResult>(m, "EstimateResult")
        .def_readonly("kappa_hat", &EstimateResult::kappa_hat)
        .def_readonly("full_sample_value", &EstimateResult::full_sample_value)
        .def_readonly("trace", &EstimateResult::trace)
        .def_readonly("zero_norm_flagged", &EstimateResult::zero_norm_flagged)
        .def_property_readonly("alpha",
                               [](const EstimateResult& r) { return r.argmax.alpha; })
        .def_property_readonly("beta", [](const EstimateResult& r) { return r.argmax.beta; });

    m.def(
        "estimate",
        [](const Matrix& x, const Matrix& y, int iterations, int batch_size, double learning_rate,
           double weight_decay, bool unit_sphere, double smoothing_h, std::uint64_t seed,
           bool standardize_batches) {
            const PairedSample s(x, y);
            const auto cfg = make_config(iterations, std::min<int>(batch_size, (int)s.n()),
                                         learning_rate, weight_decay, unit_sphere, smoothing_h,
                                         seed, standardize_batches);
            return cfg.smoothing ? estimate_smoothed(s, cfg) : estimate(s, cfg);
        },
        py::arg("x"), py::arg("y"), py::arg("iterations") = 1000, py::arg("batch_size") = 1024,
        py::arg("learning_rate") = 0.007, py::arg("weight_decay") = 0.01,
        py::arg("unit_sphere") = true, py::arg("smoothing_h") = 0.0, py::arg("seed") = 0,
        py::arg("standardize_batches") = true,
        "Gradient-ascent dependence estimate between row-paired samples.");

    m.def(
        "delta_n",
        [](const Matrix& x, const Matrix& y, const Vector& alpha, const Vector& beta) {
            const Cx d = delta_n(PairedSample(x, y), FrequencyPoint{alpha, beta});
            return std::complex<double>(d.re, d.im);
        },
        py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("beta"),
        "Joint ECF minus the product of marginal ECFs at one frequency pair.");

    m.def(
        "permutation_null",
        [](const Matrix& x, const Matrix& y, int n_perm, int iterations, int batch_size,
           double learning_rate, std::uint64_t seed) {
            const PairedSample s(x, y);
            const auto cfg = make_config(iterations, std::min<int>(batch_size, (int)s.n()),
                                         learning_rate, 0.01, true, 0.0, seed, true);
            return permutation_null(s, cfg, n_perm);
        },
        py::arg("x"), py::arg("y"), py::arg("n_perm") = 100, py::arg("iterations") = 200,
        py::arg("batch_size") = 1024, py::arg("learning_rate") = 0.007, py::arg("seed") = 0,
        "Sorted estimates under random re-pairings of y.");

    m.def(
        "gaussian_kacim",
        [](const Matrix& sigma_x, const Matrix& sigma_y, const Matrix& sigma_xy) {
            return gaussian_kacim(GaussianSpec{sigma_x, sigma_y, sigma_xy});
        },
        py::arg("sigma_x"), py::arg("sigma_y"), py::arg("sigma_xy"),
        "Closed-form population value for zero-mean Gaussian pairs.");

    m.def("dcor_biased", &dcor_biased, py::arg("x"), py::arg("y"));
    m.def("dcor_unbiased", &dcor_unbiased, py::arg("x"), py::arg("y"));
    m.def("hsic_gaussian", &hsic_gaussian, py::arg("x"), py::arg("y"));

    m.def(
        "wilcoxon_signed_rank",
        [](const std::vector<double>& a, const std::vector<double>& b,
           const std::string& alternative) {
            const auto alt = alternative == "greater" ? WilcoxonAlternative::Greater
                                                      : WilcoxonAlternative::TwoSided;
            return wilcoxon_signed_rank(a, b, alt);
        },
        py::arg("a"), py::arg("b"), py::arg("alternative") = "greater");

    m.def(
        "gen_independent",
        [](int n, int d_x, int d_y, std::uint64_t seed) {
            GeneratorSpec spec;
            spec.n = n;
            spec.d_x = d_x;
            spec.d_y = d_y;
            spec.seed = seed;
            const auto s = gen_independent(spec);
            return std::make_pair(s.x, s.y);
        },
        py::arg("n"), py::arg("d_x"), py::arg("d_y"), py::arg("seed") = 0);

    m.def(
        "gen_additive",
        [](int n, int d_x, int d_y, double noise_scale, const std::string& noise_family,
           std::uint64_t seed) {
            GeneratorSpec spec;
            spec.n = n;
            spec.d_x = d_x;
            spec.d_y = d_y;
            spec.noise_scale = noise_scale;
            spec.noise_family = noise_family_from_string(noise_family);
            spec.seed = seed;
            const auto [s, a] = gen_additive(spec);
            return std::make_tuple(s.x, s.y, a);
        },
        py::arg("n"), py::arg("d_x"), py::arg("d_y"), py::arg("noise_scale") = 0.2,
        py::arg("noise_family") = "gaussian", py::arg("seed") = 0);

    m.def(
        "gen_gaussian_pair",
        [](const Matrix& sigma_x, const Matrix& sigma_y, const Matrix& sigma_xy, int n,
           std::uint64_t seed) {
            const auto s = gen_gaussian_pair(GaussianSpec{sigma_x, sigma_y, sigma_xy}, n, seed);
            return std::make_pair(s.x, s.y);
        },
        py::arg("sigma_x"), py::arg("sigma_y"), py::arg("sigma_xy"), py::arg("n"),
        py::arg("seed") = 0);

    m.def(
        "gen_classification",
        [](int n, int d_x, int n_classes, int d_informative, std::uint64_t seed) {
            const auto d = gen_classification(n, d_x, n_classes, d_informative, seed);
            return std::make_pair(d.x, d.labels);
        },
        py::arg("n"), py::arg("d_x"), py::arg("n_classes"), py::arg("d_informative"),
        py::arg("seed") = 0);

    py::class_<ProjectionModel>(m, "ProjectionModel")
        .def_readonly("w", &ProjectionModel::w)
        .def_readonly("k", &ProjectionModel::k)
        .def_readonly("converged", &ProjectionModel::converged);

    m.def(
        "train_feature_extractor",
        [](const Matrix& x, const std::vector<int>& labels, int n_classes, int k,
           const std::string& measure, int iterations, double learning_rate, double ortho_lambda,
           int batch_size, std::uint64_t seed) {
            LabeledDataset d{x, labels, n_classes};
            FxConfig cfg;
            cfg.iterations = iterations;
            cfg.learning_rate = learning_rate;
            cfg.ortho_lambda = ortho_lambda;
            cfg.batch_size = batch_size;
            cfg.seed = seed;
            return train_feature_extractor(d, k, cfg, fx_measure_from_string(measure));
        },
        py::arg("x"), py::arg("labels"), py::arg("n_classes"), py::arg("k"),
        py::arg("measure") = "kacim", py::arg("iterations") = 250,
        py::arg("learning_rate") = 0.007, py::arg("ortho_lambda") = 1.0,
        py::arg("batch_size") = 1024, py::arg("seed") = 0);

    m.def("extract_features", &extract_features, py::arg("model"), py::arg("x"));
}
