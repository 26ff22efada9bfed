#include "kacim/estimator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kacim/rng.hpp"

namespace kacim {

void validate(const GaussianSpec& g) {
    if (g.sigma_x.rows() != g.sigma_x.cols() || g.sigma_y.rows() != g.sigma_y.cols()) {
        throw std::invalid_argument("GaussianSpec: covariance blocks must be square");
    }
    if (g.sigma_xy.rows() != g.sigma_x.rows() || g.sigma_xy.cols() != g.sigma_y.rows()) {
        throw std::invalid_argument("GaussianSpec: cross-covariance shape mismatch");
    }
    if ((g.sigma_x - g.sigma_x.transpose()).cwiseAbs().maxCoeff() > 1e-10 ||
        (g.sigma_y - g.sigma_y.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("GaussianSpec: covariance not symmetric");
    }
    Eigen::LLT<Matrix> lx(g.sigma_x), ly(g.sigma_y);
    if (lx.info() != Eigen::Success || ly.info() != Eigen::Success) {
        throw std::invalid_argument("GaussianSpec: covariance not positive definite");
    }
    const Eigen::Index dx = g.sigma_x.rows(), dy = g.sigma_y.rows();
    Matrix joint(dx + dy, dx + dy);
    joint.topLeftCorner(dx, dx) = g.sigma_x;
    joint.topRightCorner(dx, dy) = g.sigma_xy;
    joint.bottomLeftCorner(dy, dx) = g.sigma_xy.transpose();
    joint.bottomRightCorner(dy, dy) = g.sigma_y;
    Eigen::SelfAdjointEigenSolver<Matrix> es(joint);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        throw std::invalid_argument("GaussianSpec: joint covariance not PSD");
    }
}

void optimizer_step(Vector& params, const Vector& grad, AdamState& state, double lr, double wd) {
    if (params.size() != grad.size()) throw std::invalid_argument("optimizer_step: shape mismatch");
    if (!params.allFinite() || !grad.allFinite()) {
        throw std::invalid_argument("optimizer_step: non-finite input");
    }
    if (state.step == 0) {
        state.m = Vector::Zero(params.size());
        state.v = Vector::Zero(params.size());
    }
    constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;

    params *= (1.0 - lr * wd);  // decoupled decay
    ++state.step;
    state.m = b1 * state.m + (1.0 - b1) * grad;
    state.v = b2 * state.v.array().matrix() + (1.0 - b2) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
    const double c2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
    params += lr * (state.m / c1).cwiseQuotient((state.v / c2).cwiseSqrt().array().matrix() +
                                                Vector::Constant(params.size(), eps));
}

Vector project_unit_sphere(const Vector& v, bool* flagged) {
    const double norm = v.norm();
    if (norm < 1e-12) {
        if (flagged) *flagged = true;
        Vector e = Vector::Zero(v.size());
        e[0] = 1.0;
        return e;
    }
    return v / norm;
}

namespace {

PairedSample take_batch(const PairedSample& s, const std::vector<int>& idx) {
    PairedSample b;
    b.x = Matrix(static_cast<Eigen::Index>(idx.size()), s.dx());
    b.y = Matrix(static_cast<Eigen::Index>(idx.size()), s.dy());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        b.x.row(static_cast<Eigen::Index>(i)) = s.x.row(idx[i]);
        b.y.row(static_cast<Eigen::Index>(i)) = s.y.row(idx[i]);
    }
    return b;
}

EstimateResult run_estimate(const PairedSample& s, const EstimatorConfig& cfg, double h) {
    const int n = static_cast<int>(s.n());
    if (cfg.batch_size < 1) throw std::invalid_argument("estimate: batch_size must be positive");
    if (cfg.batch_size > n) {
        throw std::invalid_argument("estimate: batch_size " + std::to_string(cfg.batch_size) +
                                    " exceeds sample size " + std::to_string(n));
    }
    if (cfg.iterations < 0) throw std::invalid_argument("estimate: negative iteration count");
    if (h < 0.0) throw std::invalid_argument("estimate: negative bandwidth");

    const Eigen::Index dx = s.dx(), dy = s.dy();

    Rng init_rng = Rng::stream(cfg.seed, "init");
    Vector params(dx + dy);
    for (Eigen::Index i = 0; i < dx + dy; ++i) params[i] = init_rng.uniform(-1.0, 1.0);

    EstimateResult res;
    if (cfg.unit_sphere) {
        params.head(dx) = project_unit_sphere(params.head(dx), &res.zero_norm_flagged);
        params.tail(dy) = project_unit_sphere(params.tail(dy), &res.zero_norm_flagged);
    }

    Rng batch_rng = Rng::stream(cfg.seed, "batch");
    AdamState state;
    res.trace.reserve(static_cast<std::size_t>(cfg.iterations));

    for (int it = 1; it <= cfg.iterations; ++it) {
        PairedSample batch = take_batch(s, batch_rng.sample_without_replacement(n, cfg.batch_size));
        if (cfg.standardize_batches) {
            batch.x = standardize(batch.x).first;
            batch.y = standardize(batch.y).first;
        }
        FrequencyPoint f{params.head(dx), params.tail(dy)};
        const ModulusGradient g = delta_modulus_grad(batch, f, h);
        if (!std::isfinite(g.value) || !g.d_alpha.allFinite() || !g.d_beta.allFinite()) {
            throw std::runtime_error("estimate: non-finite gradient at iteration " +
                                     std::to_string(it));
        }
        Vector grad(dx + dy);
        grad.head(dx) = g.d_alpha;
        grad.tail(dy) = g.d_beta;
        optimizer_step(params, grad, state, cfg.learning_rate, cfg.weight_decay);

        if (cfg.unit_sphere) {
            params.head(dx) = project_unit_sphere(params.head(dx), &res.zero_norm_flagged);
            params.tail(dy) = project_unit_sphere(params.tail(dy), &res.zero_norm_flagged);
        }
        if (cfg.freq_norm_bound) {
            const double norm = params.norm();
            if (norm > *cfg.freq_norm_bound) params *= *cfg.freq_norm_bound / norm;
        }
        res.trace.emplace_back(it, g.value);
    }

    res.argmax.alpha = params.head(dx);
    res.argmax.beta = params.tail(dy);

    PairedSample full = s;
    if (cfg.standardize_batches) {
        full.x = standardize(full.x).first;
        full.y = standardize(full.y).first;
    }
    const ModulusGradient final_val = delta_modulus_grad(full, res.argmax, h);
    res.full_sample_value = final_val.value;
    res.kappa_hat = res.full_sample_value;
    return res;
}

}  // namespace

EstimateResult estimate(const PairedSample& s, const EstimatorConfig& cfg) {
    return run_estimate(s, cfg, 0.0);
}

EstimateResult estimate_smoothed(const PairedSample& s, const EstimatorConfig& cfg) {
    if (!cfg.smoothing) throw std::invalid_argument("estimate_smoothed: smoothing not set");
    return run_estimate(s, cfg, cfg.smoothing->h);
}

std::vector<double> permutation_null(const PairedSample& s, const EstimatorConfig& cfg,
                                     int n_perm) {
    if (n_perm < 20) throw std::invalid_argument("permutation_null: n_perm must be >= 20");
    const int n = static_cast<int>(s.n());
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n_perm));
    for (int p = 0; p < n_perm; ++p) {
        const std::string role = "perm:" + std::to_string(p);
        auto perm = Rng::stream(cfg.seed, role).permutation(n);
        PairedSample reparied;
        reparied.x = s.x;
        reparied.y = Matrix(n, s.dy());
        for (int i = 0; i < n; ++i) reparied.y.row(i) = s.y.row(perm[static_cast<std::size_t>(i)]);
        EstimatorConfig c = cfg;
        c.seed = Rng::mix(cfg.seed ^ Rng::hash_role(role));
        values.push_back(estimate(reparied, c).kappa_hat);
    }
    std::sort(values.begin(), values.end());
    return values;
}

namespace {

Matrix inverse_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.eigenvalues().minCoeff() <= 0.0) {
        throw std::invalid_argument("covariance not positive definite");
    }
    return es.eigenvectors() *
           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace

CanonicalPair first_canonical_pair(const GaussianSpec& g) {
    validate(g);
    const Matrix isx = inverse_sqrt(g.sigma_x);
    const Matrix isy = inverse_sqrt(g.sigma_y);
    const Matrix m = isx * g.sigma_xy * isy;
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    CanonicalPair cp;
    cp.rho = std::min(1.0, std::max(0.0, svd.singularValues()[0]));
    cp.alpha_dir = isx * svd.matrixU().col(0);
    cp.beta_dir = isy * svd.matrixV().col(0);
    return cp;
}

double gaussian_kacim(const GaussianSpec& g) {
    const double rho = first_canonical_pair(g).rho;
    // With alpha = s * alpha_dir, beta = t * beta_dir the objective reduces to
    // exp(-(s^2 + t^2)/2) * |exp(-s t rho) - 1| on the plane.
    const auto objective = [rho](double sv, double tv) {
        return std::exp(-0.5 * (sv * sv + tv * tv)) * std::abs(std::exp(-sv * tv * rho) - 1.0);
    };

    double best = 0.0, bs = 0.0, bt = 0.0;
    for (double sv = -5.0; sv <= 5.0 + 1e-12; sv += 0.05) {
        for (double tv = -5.0; tv <= 5.0 + 1e-12; tv += 0.05) {
            const double val = objective(sv, tv);
            if (val > best) {
                best = val;
                bs = sv;
                bt = tv;
            }
        }
    }
    double step = 0.05;
    while (step > 1e-9) {
        step *= 0.5;
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                const double sv = bs + i * step, tv = bt + j * step;
                const double val = objective(sv, tv);
                if (val > best) {
                    best = val;
                    bs = sv;
                    bt = tv;
                }
            }
        }
    }
    return best;
}

}  // namespace kacim
