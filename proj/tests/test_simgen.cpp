#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "kacim/fx.hpp"
#include "kacim/rng.hpp"
#include "kacim/simgen.hpp"

using namespace kacim;

TEST_CASE("noise family names round trip") {
    for (const auto* name : {"gaussian", "uniform", "laplace", "lognormal"}) {
        CHECK(to_string(noise_family_from_string(name)) == name);
    }
    CHECK_THROWS_AS(noise_family_from_string("cauchy"), std::invalid_argument);
}

TEST_CASE("gen_independent has the advertised moments at scale") {
    GeneratorSpec spec;
    spec.n = 4096;
    spec.d_x = 512;
    spec.d_y = 64;
    spec.seed = 101;
    const auto s = gen_independent(spec);
    CHECK(s.x.rows() == 4096);
    CHECK(s.x.cols() == 512);
    CHECK(s.y.cols() == 64);
    CHECK(s.x.colwise().mean().cwiseAbs().maxCoeff() < 0.05);
    CHECK(s.y.colwise().mean().cwiseAbs().maxCoeff() < 0.05);
    // cross-covariance of independent streams stays near zero
    const Matrix xc = s.x.rowwise() - s.x.colwise().mean();
    const Matrix yc = s.y.rowwise() - s.y.colwise().mean();
    // 512*64 entries, each ~ N(0, 1/n): the max of ~33k draws sits near 4
    // standard deviations, so the band is set at 5
    const Matrix cross = (xc.transpose() * yc) / 4096.0;
    CHECK(cross.cwiseAbs().maxCoeff() < 5.0 / std::sqrt(4096.0));
}

TEST_CASE("gen_independent is deterministic and fine at n=1") {
    GeneratorSpec spec;
    spec.n = 64;
    spec.d_x = 3;
    spec.d_y = 2;
    spec.seed = 5;
    const auto a = gen_independent(spec);
    const auto b = gen_independent(spec);
    CHECK((a.x - b.x).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.y - b.y).cwiseAbs().maxCoeff() == 0.0);

    spec.n = 1;
    const auto single = gen_independent(spec);
    CHECK(single.n() == 1);
    CHECK(single.x.allFinite());
    CHECK(single.y.allFinite());
}

TEST_CASE("gen_additive at lambda=0 is a deterministic function of x") {
    GeneratorSpec spec;
    spec.n = 128;
    spec.d_x = 5;
    spec.d_y = 4;
    spec.noise_scale = 0.0;
    spec.seed = 9;
    const auto [s, a] = gen_additive(spec);
    const auto [s2, a2] = gen_additive(spec);
    CHECK((s.y - s2.y).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a - a2).cwiseAbs().maxCoeff() == 0.0);
    // y must equal sin(Ax)+cos(Ax) exactly
    const Matrix proj = s.x * a.transpose();
    const Matrix expected = proj.array().sin() + proj.array().cos();
    CHECK((s.y - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gen_additive amplitude bound and shared substreams across lambdas") {
    GeneratorSpec spec;
    spec.n = 256;
    spec.d_x = 6;
    spec.d_y = 6;
    spec.noise_scale = 0.0;
    spec.seed = 10;
    const auto [clean, a0] = gen_additive(spec);
    CHECK(clean.y.maxCoeff() <= std::sqrt(2.0) + 1e-12);
    CHECK(clean.y.minCoeff() >= -std::sqrt(2.0) - 1e-12);

    spec.noise_scale = 1.5;
    const auto [noisy, a1] = gen_additive(spec);
    CHECK((a0 - a1).cwiseAbs().maxCoeff() == 0.0);  // A drawn once per seed
    CHECK((clean.x - noisy.x).cwiseAbs().maxCoeff() == 0.0);  // x-stream independent of the noise scale
}

TEST_CASE("gen_additive noise families are standardized") {
    for (const auto* name : {"gaussian", "uniform", "laplace", "lognormal"}) {
        GeneratorSpec spec;
        spec.n = 8192;
        spec.d_x = 2;
        spec.d_y = 1;
        spec.noise_scale = 1.0;
        spec.noise_family = noise_family_from_string(name);
        spec.seed = 77;
        const auto noisy = gen_additive(spec).first;
        spec.noise_scale = 0.0;
        const auto clean = gen_additive(spec).first;
        const Matrix eps = noisy.y - clean.y;  // lambda * eps with lambda = 1
        const double mean = eps.mean();
        const double sd = std::sqrt((eps.array() - mean).square().sum() /
                                    static_cast<double>(eps.size()));
        CHECK(std::abs(mean) < 0.05);
        CHECK(std::abs(sd - 1.0) < 0.05);
    }
}

TEST_CASE("gen_gaussian_pair hits the requested covariance structure") {
    GaussianSpec g;
    g.sigma_x = Matrix::Identity(2, 2);
    g.sigma_y = Matrix::Identity(2, 2);
    g.sigma_xy = Matrix::Zero(2, 2);
    const auto s = gen_gaussian_pair(g, 50000, 3);
    const Matrix xc = s.x.rowwise() - s.x.colwise().mean();
    const Matrix yc = s.y.rowwise() - s.y.colwise().mean();
    const Matrix cross = (xc.transpose() * yc) / 50000.0;
    CHECK(cross.cwiseAbs().maxCoeff() < 0.02);

    GaussianSpec one;
    one.sigma_x = Matrix::Constant(1, 1, 1.0);
    one.sigma_y = Matrix::Constant(1, 1, 1.0);
    one.sigma_xy = Matrix::Constant(1, 1, 0.8);
    const auto p = gen_gaussian_pair(one, 50000, 4);
    const double corr =
        ((p.x.array() - p.x.mean()) * (p.y.array() - p.y.mean())).sum() /
        std::sqrt((p.x.array() - p.x.mean()).square().sum() *
                  (p.y.array() - p.y.mean()).square().sum());
    CHECK(corr == doctest::Approx(0.8).epsilon(0.0125));  // within +-0.01 absolute

    const auto single = gen_gaussian_pair(one, 1, 5);
    CHECK(single.n() == 1);
    CHECK(std::isfinite(single.x(0, 0)));
    CHECK(std::isfinite(single.y(0, 0)));
}

TEST_CASE("gen_classification without informative dimensions carries no signal") {
    const auto d = gen_classification(2000, 6, 2, 0, 21);
    SplitSpec sp;
    sp.seed = 21;
    const auto [train, val, test] = split(d, sp);
    const auto [xs, stats] = standardize(train.x);
    const auto clf = logistic_fit(xs, train.labels, train.n_classes);
    const double acc =
        logistic_accuracy(clf, apply_standardization(test.x, stats), test.labels);
    CHECK(acc >= 0.45);
    CHECK(acc <= 0.55);
}

TEST_CASE("two informative Gaussian classes approach the closed-form accuracy") {
    // means sqrt(2)*e_0 and sqrt(2)*e_1 are distance 2 apart; unit-noise
    // classes at that separation have best-case accuracy Phi(1) ~= 0.841
    const auto d = gen_classification(5000, 2, 2, 2, 22);
    SplitSpec sp;
    sp.seed = 22;
    const auto [train, val, test] = split(d, sp);
    const auto [xs, stats] = standardize(train.x);
    const auto clf = logistic_fit(xs, train.labels, train.n_classes);
    const double acc =
        logistic_accuracy(clf, apply_standardization(test.x, stats), test.labels);
    CHECK(acc == doctest::Approx(0.841).epsilon(0.06));  // within +-0.05
}

TEST_CASE("gen_classification determinism and guards") {
    const auto a = gen_classification(100, 5, 3, 3, 8);
    const auto b = gen_classification(100, 5, 3, 3, 8);
    CHECK((a.x - b.x).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.labels == b.labels);

    CHECK_THROWS_AS(gen_classification(100, 5, 3, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(gen_classification(100, 5, 3, 6, 8), std::invalid_argument);
    CHECK_THROWS_AS(gen_classification(1, 5, 2, 2, 8), std::invalid_argument);
}
