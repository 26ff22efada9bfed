#include "kacim/fx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "kacim/baselines.hpp"
#include "kacim/estimator.hpp"
#include "kacim/rng.hpp"

namespace kacim {

FxMeasure fx_measure_from_string(const std::string& name) {
    if (name == "kacim") return FxMeasure::KacIM;
    if (name == "hsic") return FxMeasure::Hsic;
    if (name == "dcor") return FxMeasure::DCor;
    throw std::invalid_argument("unknown feature-extraction measure: " + name);
}

FxObjective fx_objective(const Matrix& w, const FrequencyPoint& freq, const PairedSample& batch,
                         double ortho_lambda, const StandardizationStats* wx_stats) {
    const Eigen::Index k = w.rows(), d = w.cols();
    const Eigen::Index n = batch.n();
    if (batch.x.cols() != d) throw std::invalid_argument("fx_objective: W/x dimension mismatch");
    if (freq.alpha.size() != k || freq.beta.size() != batch.y.cols()) {
        throw std::invalid_argument("fx_objective: frequency dimension mismatch");
    }
    if (ortho_lambda < 0.0) throw std::invalid_argument("fx_objective: negative ortho_lambda");

    Matrix f = batch.x * w.transpose();  // n x k
    Vector sigma = Vector::Ones(k);
    if (wx_stats) {
        f = apply_standardization(f, *wx_stats);
        sigma = wx_stats->std;
    }

    const Vector px = f * freq.alpha;
    const Vector py = batch.y * freq.beta;
    const double inv_n = 1.0 / static_cast<double>(n);

    Vector cx(n), sx(n), cy(n), sy(n), cj(n), sj(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        cx[j] = std::cos(px[j]);
        sx[j] = std::sin(px[j]);
        cy[j] = std::cos(py[j]);
        sy[j] = std::sin(py[j]);
        const double p = px[j] + py[j];
        cj[j] = std::cos(p);
        sj[j] = std::sin(p);
    }
    const Cx u{cx.mean(), sx.mean()};
    const Cx v{cy.mean(), sy.mean()};
    const Cx phi{cj.mean(), sj.mean()};
    const Cx delta = phi - u * v;
    const double mod = delta.modulus();

    FxObjective out;
    out.grad_w = Matrix::Zero(k, d);
    out.grad_alpha = Vector::Zero(k);
    out.grad_beta = Vector::Zero(batch.y.cols());

    if (mod >= 1e-12) {
        const Cx dir = delta.conj() * (1.0 / mod);
        // per-sample coefficients of d(phase)/d(.) in the modulus gradient
        Vector s_x(n), s_y(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            // i * (e^{i theta_j} - e^{i px_j} v)
            const double zx_re = -sj[j] + cx[j] * v.im + sx[j] * v.re;
            const double zx_im = cj[j] - cx[j] * v.re + sx[j] * v.im;
            s_x[j] = (dir.re * zx_re - dir.im * zx_im) * inv_n;
            // i * (e^{i theta_j} - u e^{i py_j})
            const double zy_re = -sj[j] + u.re * sy[j] + u.im * cy[j];
            const double zy_im = cj[j] - u.re * cy[j] + u.im * sy[j];
            s_y[j] = (dir.re * zy_re - dir.im * zy_im) * inv_n;
        }
        out.grad_alpha = f.transpose() * s_x;
        out.grad_beta = batch.y.transpose() * s_y;
        // rank-1 structure: dW_{ab} = (alpha_a / sigma_a) * sum_j s_x_j x_{jb}
        const Vector xs = batch.x.transpose() * s_x;
        out.grad_w = freq.alpha.cwiseQuotient(sigma) * xs.transpose();
    }

    out.value = mod;
    if (ortho_lambda > 0.0) {
        const Matrix gram = w * w.transpose() - Matrix::Identity(k, k);
        out.value -= ortho_lambda * gram.squaredNorm();
        out.grad_w -= 4.0 * ortho_lambda * gram * w;
    }
    return out;
}

MeasureEval fx_measure_value_grad(FxMeasure measure, const Matrix& f, const Matrix& y) {
    const Eigen::Index n = f.rows();
    if (y.rows() != n) throw std::invalid_argument("fx_measure_value_grad: row mismatch");
    MeasureEval out;
    out.d_features = Matrix::Zero(n, f.cols());

    if (measure == FxMeasure::Hsic) {
        const double med = median_pairwise_distance(f);
        const double sigma = med > 0.0 ? med : 1.0;
        const double inv_s2 = 1.0 / (sigma * sigma);
        Matrix kmat(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            kmat(i, i) = 1.0;
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double val = std::exp(-0.5 * inv_s2 * (f.row(i) - f.row(j)).squaredNorm());
                kmat(i, j) = val;
                kmat(j, i) = val;
            }
        }
        const double med_y = median_pairwise_distance(y);
        const double sigma_y = med_y > 0.0 ? med_y : 1.0;
        Matrix lmat(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            lmat(i, i) = 1.0;
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double val =
                    std::exp(-0.5 / (sigma_y * sigma_y) * (y.row(i) - y.row(j)).squaredNorm());
                lmat(i, j) = val;
                lmat(j, i) = val;
            }
        }
        const double dn = static_cast<double>(n);
        const Matrix h = Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / dn);
        const Matrix m = h * lmat * h;
        out.value = kmat.cwiseProduct(m).sum() / (dn * dn);
        const Matrix g = m.cwiseProduct(kmat);
        const Vector row_sums = g.rowwise().sum();
        // d/dF_i of sum_ij G_ij K_ij with K depending on F (sigma frozen)
        out.d_features =
            (-2.0 * inv_s2 / (dn * dn)) * (row_sums.asDiagonal() * f - g * f);
        return out;
    }

    if (measure == FxMeasure::DCor) {
        const Matrix dx = pairwise_distances(f);
        const Matrix dy = pairwise_distances(y);
        const double dn = static_cast<double>(n);
        const auto center = [&](const Matrix& m) {
            const Vector rm = m.rowwise().mean();
            Matrix a = m;
            a.colwise() -= rm;
            a.rowwise() -= rm.transpose();
            a.array() += m.mean();
            return a;
        };
        const Matrix a = center(dx);
        const Matrix b = center(dy);
        const double vxy = a.cwiseProduct(b).mean();
        const double vxx = a.cwiseProduct(a).mean();
        const double vyy = b.cwiseProduct(b).mean();
        if (vxx * vyy < 1e-24) return out;
        const double s = std::sqrt(vxx * vyy);
        const double r2 = std::max(0.0, vxy) / s;
        out.value = std::sqrt(r2);
        if (out.value < 1e-8 || vxy <= 0.0) return out;

        const double dv = 1.0 / (2.0 * out.value);
        const double c_vxy = dv / s;
        const double c_vxx = dv * (-vxy / (2.0 * s * vxx));
        // <Dx, HBH> = <A, B> and <Dx, HAH> = <A, A>, so the weights on the
        // raw distance entries are B and 2A (H-centered factors absorbed).
        const Matrix wgt = (c_vxy * b + c_vxx * 2.0 * a) / (dn * dn);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (i == j || dx(i, j) < 1e-12) continue;
                // both (i,j) and (j,i) terms touch row i
                out.d_features.row(i) +=
                    2.0 * wgt(i, j) / dx(i, j) * (f.row(i) - f.row(j));
            }
        }
        return out;
    }

    throw std::invalid_argument("fx_measure_value_grad: KacIM path uses fx_objective");
}

ProjectionModel train_feature_extractor(const LabeledDataset& train, int k, const FxConfig& cfg,
                                        FxMeasure measure) {
    const int d = static_cast<int>(train.dx());
    const int n = static_cast<int>(train.n());
    if (k < 1 || k > d) {
        throw std::invalid_argument("train_feature_extractor: k must be in [1, d_x]");
    }
    const int n_b = std::min(cfg.batch_size, n);

    ProjectionModel model;
    model.k = k;
    auto [xs, stats] = standardize(train.x);
    model.input_stats = stats;
    const Matrix y = one_hot(train.labels, train.n_classes);
    const int dy = train.n_classes;

    Rng init_rng = Rng::stream(cfg.seed, "fx_init");
    const double w_scale = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix w(k, d);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < d; ++j) w(i, j) = init_rng.uniform(-w_scale, w_scale);

    FrequencyPoint freq;
    if (measure == FxMeasure::KacIM) {
        freq.alpha = Vector(k);
        freq.beta = Vector(dy);
        for (Eigen::Index i = 0; i < k; ++i) freq.alpha[i] = init_rng.uniform(-1.0, 1.0);
        for (Eigen::Index i = 0; i < dy; ++i) freq.beta[i] = init_rng.uniform(-1.0, 1.0);
        freq.alpha = project_unit_sphere(freq.alpha);
        freq.beta = project_unit_sphere(freq.beta);
    }

    Rng batch_rng = Rng::stream(cfg.seed, "fx_batch");
    AdamState state_w, state_a, state_b;
    Vector w_flat = Eigen::Map<Vector>(w.data(), w.size());

    for (int it = 1; it <= cfg.iterations; ++it) {
        const auto idx = batch_rng.sample_without_replacement(n, n_b);
        Matrix xb(n_b, d), yb(n_b, dy);
        for (int i = 0; i < n_b; ++i) {
            xb.row(i) = xs.row(idx[static_cast<std::size_t>(i)]);
            yb.row(i) = y.row(idx[static_cast<std::size_t>(i)]);
        }
        w = Eigen::Map<Matrix>(w_flat.data(), k, d);

        Matrix grad_w;
        double value = 0.0;
        if (measure == FxMeasure::KacIM) {
            const Matrix f = xb * w.transpose();
            const StandardizationStats f_stats = standardize(f).second;
            const FxObjective obj =
                fx_objective(w, freq, PairedSample(xb, yb), cfg.ortho_lambda, &f_stats);
            grad_w = obj.grad_w;
            value = obj.value;
            optimizer_step(freq.alpha, obj.grad_alpha, state_a, cfg.learning_rate,
                           cfg.weight_decay);
            optimizer_step(freq.beta, obj.grad_beta, state_b, cfg.learning_rate,
                           cfg.weight_decay);
            freq.alpha = project_unit_sphere(freq.alpha);
            freq.beta = project_unit_sphere(freq.beta);
        } else {
            const auto [fs, f_stats] = standardize(xb * w.transpose());
            const MeasureEval me = fx_measure_value_grad(measure, fs, yb);
            // chain through frozen standardization, then through F = X W^T
            const Matrix d_raw =
                me.d_features.array().rowwise() / f_stats.std.transpose().array();
            grad_w = d_raw.transpose() * xb;
            value = me.value;
            const Matrix gram = w * w.transpose() - Matrix::Identity(k, k);
            value -= cfg.ortho_lambda * gram.squaredNorm();
            grad_w -= 4.0 * cfg.ortho_lambda * gram * w;
        }
        if (!std::isfinite(value) || !grad_w.allFinite()) {
            throw std::runtime_error("train_feature_extractor: non-finite objective at iteration " +
                                     std::to_string(it));
        }
        Vector g_flat = Eigen::Map<Vector>(grad_w.data(), grad_w.size());
        optimizer_step(w_flat, g_flat, state_w, cfg.learning_rate, cfg.weight_decay);
    }

    model.w = Eigen::Map<Matrix>(w_flat.data(), k, d);
    model.freq = freq;
    const Matrix gram = model.w * model.w.transpose() - Matrix::Identity(k, k);
    model.converged = gram.cwiseAbs().maxCoeff() < 0.05;
    return model;
}

Matrix extract_features(const ProjectionModel& model, const Matrix& x) {
    return apply_standardization(x, model.input_stats) * model.w.transpose();
}

LogisticModel logistic_fit(const Matrix& x, const std::vector<int>& labels, int n_classes,
                           double l2, int max_iter) {
    if (n_classes < 2) throw std::invalid_argument("logistic_fit: n_classes must be >= 2");
    if (!x.allFinite()) throw std::invalid_argument("logistic_fit: non-finite features");
    const Eigen::Index n = x.rows(), d = x.cols();
    if (static_cast<Eigen::Index>(labels.size()) != n) {
        throw std::invalid_argument("logistic_fit: label count mismatch");
    }
    const Matrix y = one_hot(labels, n_classes);

    LogisticModel model;
    model.n_classes = n_classes;
    model.w = Matrix::Zero(n_classes, d);
    model.b = Vector::Zero(n_classes);

    constexpr double step = 0.1;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int it = 0; it < max_iter; ++it) {
        Matrix logits = x * model.w.transpose();
        logits.rowwise() += model.b.transpose();
        // stable softmax
        const Vector row_max = logits.rowwise().maxCoeff();
        Matrix p = (logits.colwise() - row_max).array().exp();
        const Vector sums = p.rowwise().sum();
        p.array().colwise() /= sums.array();

        const Matrix resid = p - y;
        const Matrix grad_w = resid.transpose() * x * inv_n + l2 * model.w;
        const Vector grad_b = resid.colwise().sum() * inv_n;
        model.w -= step * grad_w;
        model.b -= step * grad_b;
    }
    return model;
}

double logistic_accuracy(const LogisticModel& model, const Matrix& x,
                         const std::vector<int>& labels) {
    const Eigen::Index n = x.rows();
    Matrix logits = x * model.w.transpose();
    logits.rowwise() += model.b.transpose();
    int hits = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index pred;
        logits.row(i).maxCoeff(&pred);
        if (static_cast<int>(pred) == labels[static_cast<std::size_t>(i)]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(n);
}

std::vector<int> dimension_grid(int d_x) {
    if (d_x < 10) throw std::invalid_argument("dimension_grid: d_x must be >= 10");
    const int step = static_cast<int>(std::ceil(0.1 * d_x));
    std::vector<int> grid;
    for (int v = 10; v <= d_x; v += step) grid.push_back(v);
    return grid;
}

std::vector<SweepResult> dimension_sweep(const LabeledDataset& dataset,
                                         const std::vector<std::string>& baselines,
                                         const FxConfig& cfg, const SplitSpec& split_spec) {
    const auto [train, val, test] = split(dataset, split_spec);
    const std::vector<int> grid =
        cfg.dimension_grid.empty() ? dimension_grid(static_cast<int>(dataset.dx()))
                                   : cfg.dimension_grid;

    std::vector<SweepResult> results;
    for (const auto& name : baselines) {
        SweepResult res;
        res.baseline = name;
        if (name == "raw") {
            auto [xs, stats] = standardize(train.x);
            const auto clf = logistic_fit(xs, train.labels, train.n_classes);
            res.selected_k = static_cast<int>(dataset.dx());
            res.validation_accuracy =
                logistic_accuracy(clf, apply_standardization(val.x, stats), val.labels);
            res.test_accuracy =
                logistic_accuracy(clf, apply_standardization(test.x, stats), test.labels);
            res.validation_curve.emplace_back(res.selected_k, res.validation_accuracy);
        } else {
            const FxMeasure measure = fx_measure_from_string(name);
            double best_val = -1.0;
            for (int k : grid) {
                FxConfig kcfg = cfg;
                kcfg.seed = Rng::mix(cfg.seed ^ Rng::hash_role(name + ":" + std::to_string(k)));
                const auto model = train_feature_extractor(train, k, kcfg, measure);
                const auto clf = logistic_fit(extract_features(model, train.x), train.labels,
                                              train.n_classes);
                const double val_acc =
                    logistic_accuracy(clf, extract_features(model, val.x), val.labels);
                res.validation_curve.emplace_back(k, val_acc);
                if (val_acc > best_val) {  // ties keep the smaller k
                    best_val = val_acc;
                    res.selected_k = k;
                    res.validation_accuracy = val_acc;
                    res.test_accuracy =
                        logistic_accuracy(clf, extract_features(model, test.x), test.labels);
                }
            }
        }
        results.push_back(std::move(res));
    }
    return results;
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

double wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                            WilcoxonAlternative alternative) {
    if (a.size() != b.size()) throw std::invalid_argument("wilcoxon: unequal lengths");
    std::vector<double> diffs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) diffs.push_back(d);
    }
    const int r = static_cast<int>(diffs.size());
    if (r < 5) {
        throw std::invalid_argument("wilcoxon: fewer than 5 nonzero differences (" +
                                    std::to_string(r) + ")");
    }

    std::vector<int> order(diffs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return std::abs(diffs[i]) < std::abs(diffs[j]); });

    std::vector<double> ranks(diffs.size());
    bool has_ties = false;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() &&
               std::abs(diffs[static_cast<std::size_t>(order[j + 1])]) ==
                   std::abs(diffs[static_cast<std::size_t>(order[i])])) {
            ++j;
        }
        if (j > i) has_ties = true;
        const double mean_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t m = i; m <= j; ++m) {
            ranks[static_cast<std::size_t>(order[m])] = mean_rank;
        }
        i = j + 1;
    }

    double t_plus = 0.0;
    for (std::size_t m = 0; m < diffs.size(); ++m) {
        if (diffs[m] > 0.0) t_plus += ranks[m];
    }

    if (r <= 30 && !has_ties) {
        // exact: number of sign patterns per rank sum
        const int total = r * (r + 1) / 2;
        std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
        counts[0] = 1.0;
        for (int rank = 1; rank <= r; ++rank) {
            for (int t = total; t >= rank; --t) {
                counts[static_cast<std::size_t>(t)] += counts[static_cast<std::size_t>(t - rank)];
            }
        }
        const double denom = std::pow(2.0, r);
        const int t_obs = static_cast<int>(std::lround(t_plus));
        double p_ge = 0.0, p_le = 0.0;
        for (int t = 0; t <= total; ++t) {
            if (t >= t_obs) p_ge += counts[static_cast<std::size_t>(t)];
            if (t <= t_obs) p_le += counts[static_cast<std::size_t>(t)];
        }
        p_ge /= denom;
        p_le /= denom;
        if (alternative == WilcoxonAlternative::Greater) return p_ge;
        return std::min(1.0, 2.0 * std::min(p_ge, p_le));
    }

    // normal approximation with mean ranks and continuity correction
    const double rd = static_cast<double>(r);
    const double mu = rd * (rd + 1.0) / 4.0;
    double tie_term = 0.0;
    i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() &&
               std::abs(diffs[static_cast<std::size_t>(order[j + 1])]) ==
                   std::abs(diffs[static_cast<std::size_t>(order[i])])) {
            ++j;
        }
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double var = rd * (rd + 1.0) * (2.0 * rd + 1.0) / 24.0 - tie_term / 48.0;
    const double sd = std::sqrt(var);
    if (alternative == WilcoxonAlternative::Greater) {
        return 1.0 - normal_cdf((t_plus - mu - 0.5) / sd);
    }
    const double z = (std::abs(t_plus - mu) - 0.5) / sd;
    return std::min(1.0, 2.0 * (1.0 - normal_cdf(z)));
}

std::vector<std::string> ComparisonTable::dataset_names() const {
    std::set<std::string> s;
    for (const auto& [key, _] : cells) s.insert(key.first);
    return {s.begin(), s.end()};
}

std::vector<std::string> ComparisonTable::baseline_names() const {
    std::set<std::string> s;
    for (const auto& [key, _] : cells) s.insert(key.second);
    return {s.begin(), s.end()};
}

std::map<std::string, int> ranking_score(const ComparisonTable& t, double p_threshold) {
    const auto datasets = t.dataset_names();
    const auto baselines = t.baseline_names();

    for (const auto& d : datasets) {
        std::size_t runs = 0;
        for (const auto& b : baselines) {
            const auto it = t.cells.find({d, b});
            if (it == t.cells.end()) {
                throw std::invalid_argument("ranking_score: missing cell (" + d + ", " + b + ")");
            }
            if (runs == 0) runs = it->second.size();
            if (it->second.size() != runs) {
                throw std::invalid_argument("ranking_score: unequal run counts in dataset " + d);
            }
        }
        if (runs < 5) {
            throw std::invalid_argument(
                "ranking_score: below minimum nonzero differences (need >= 5 runs, have " +
                std::to_string(runs) + ")");
        }
    }

    std::map<std::string, int> rs;
    for (const auto& b : baselines) {
        if (b == "raw") continue;
        rs[b] = 0;
    }
    for (const auto& d : datasets) {
        for (const auto& b : baselines) {
            if (b == "raw") continue;
            for (const auto& rival : baselines) {
                if (rival == b || rival == "raw") continue;
                double p = 1.0;
                try {
                    p = wilcoxon_signed_rank(t.cells.at({d, b}), t.cells.at({d, rival}),
                                             WilcoxonAlternative::Greater);
                } catch (const std::invalid_argument&) {
                    continue;  // identical lists carry no evidence
                }
                if (p < p_threshold) ++rs[b];
            }
        }
    }
    return rs;
}

}  // namespace kacim
