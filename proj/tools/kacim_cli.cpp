#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kacim/baselines.hpp"
#include "kacim/data.hpp"
#include "kacim/estimator.hpp"
#include "kacim/fx.hpp"
#include "kacim/report.hpp"
#include "kacim/rng.hpp"
#include "kacim/simgen.hpp"

namespace {

using namespace kacim;
using nlohmann::json;

std::uint64_t env_default_seed() {
    if (const char* v = std::getenv("KACIM_SEED")) {
        return static_cast<std::uint64_t>(std::strtoull(v, nullptr, 10));
    }
    return 0;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty numeric list: " + csv);
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    for (double v : parse_doubles(csv)) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<std::string> parse_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

struct GenFlags {
    int n = 4096;
    int dx = 32;
    int dy = 32;
    double lambda = 0.2;
    std::string noise = "gaussian";
};

struct EstFlags {
    int iterations = 500;  // desk-scale default
    int batch = 1024;
    double lr = 0.007;
    double wd = 0.01;
    bool no_unit_sphere = false;
    bool no_standardize = false;
    double smooth = -1.0;  // <0: direct estimator
    double clip = 0.0;     // 0: unset
    std::uint64_t seed = env_default_seed();
};

void add_est_flags(CLI::App* cmd, EstFlags& e) {
    cmd->add_option("--iters", e.iterations, "gradient iterations");
    cmd->add_option("--batch", e.batch, "batch size");
    cmd->add_option("--lr", e.lr, "learning rate");
    cmd->add_option("--wd", e.wd, "weight decay");
    cmd->add_flag("--no-unit-sphere", e.no_unit_sphere, "disable unit-sphere projection");
    cmd->add_flag("--no-standardize", e.no_standardize, "disable batch standardization");
    cmd->add_option("--smooth", e.smooth, "smoothing bandwidth h (enables smoothed estimator)");
    cmd->add_option("--clip", e.clip, "clip ||(alpha,beta)|| to this bound");
    cmd->add_option("--seed", e.seed, "random seed (default: KACIM_SEED env or 0)");
}

EstimatorConfig to_config(const EstFlags& e, int n) {
    EstimatorConfig cfg;
    cfg.iterations = e.iterations;
    cfg.batch_size = std::min(e.batch, n);
    cfg.learning_rate = e.lr;
    cfg.weight_decay = e.wd;
    cfg.unit_sphere = !e.no_unit_sphere;
    cfg.standardize_batches = !e.no_standardize;
    cfg.seed = e.seed;
    if (e.smooth >= 0.0) cfg.smoothing = SmoothingSpec{e.smooth, SmoothingKernel::Gaussian};
    if (e.clip > 0.0) cfg.freq_norm_bound = e.clip;
    return cfg;
}

json config_json(const EstFlags& e, const EstimatorConfig& cfg) {
    json j;
    j["iterations"] = cfg.iterations;
    j["batch_size"] = cfg.batch_size;
    j["learning_rate"] = cfg.learning_rate;
    j["weight_decay"] = cfg.weight_decay;
    j["unit_sphere"] = cfg.unit_sphere;
    j["standardize_batches"] = cfg.standardize_batches;
    j["seed"] = cfg.seed;
    if (cfg.smoothing) j["smoothing_h"] = cfg.smoothing->h;
    if (cfg.freq_norm_bound) j["freq_norm_bound"] = *cfg.freq_norm_bound;
    (void)e;
    return j;
}

EstimateResult run_one(const PairedSample& s, const EstimatorConfig& cfg) {
    return cfg.smoothing ? estimate_smoothed(s, cfg) : estimate(s, cfg);
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int cmd_estimate(const std::string& x_path, const std::string& y_path, const std::string& gen,
                 const GenFlags& g, const EstFlags& e, int n_perm, bool trace,
                 const std::string& out) {
    Timer timer;
    PairedSample sample;
    json data_cfg;
    if (!gen.empty()) {
        GeneratorSpec spec{g.n, g.dx, g.dy, g.lambda, noise_family_from_string(g.noise), e.seed};
        if (gen == "independent") {
            sample = gen_independent(spec);
        } else if (gen == "additive") {
            sample = gen_additive(spec).first;
        } else {
            throw std::invalid_argument("unknown generator: " + gen);
        }
        data_cfg = {{"generator", gen},     {"n", g.n},           {"d_x", g.dx},
                    {"d_y", g.dy},          {"lambda", g.lambda}, {"noise", g.noise}};
    } else {
        if (x_path.empty() || y_path.empty()) {
            throw std::invalid_argument("estimate: provide --x/--y CSVs or --gen");
        }
        sample = PairedSample(load_matrix_csv(x_path), load_matrix_csv(y_path));
        data_cfg = {{"x", x_path}, {"y", y_path}};
    }

    const EstimatorConfig cfg = to_config(e, static_cast<int>(sample.n()));
    const EstimateResult res = run_one(sample, cfg);

    double p_value = -1.0;
    if (n_perm > 0) {
        const auto null_values = permutation_null(sample, cfg, n_perm);
        int count = 0;
        for (double v : null_values) {
            if (v >= res.kappa_hat) ++count;
        }
        p_value = static_cast<double>(1 + count) / static_cast<double>(n_perm + 1);
    }

    CsvTable rows({"kappa_hat", "n", "d_x", "d_y", "p_value"});
    rows.add_row({CsvTable::num(res.kappa_hat), std::to_string(sample.n()),
                  std::to_string(sample.dx()), std::to_string(sample.dy()),
                  p_value < 0 ? "" : CsvTable::num(p_value)});

    ExperimentReport rep{"estimate", config_json(e, cfg), rows, timer.seconds()};
    rep.config["data"] = data_cfg;
    if (n_perm > 0) rep.config["null_permutations"] = n_perm;
    rep.write(out);

    if (trace) {
        CsvTable tr({"iteration", "batch_value"});
        for (const auto& [it, v] : res.trace) tr.add_row({std::to_string(it), CsvTable::num(v)});
        tr.write(out + "_trace.csv");
    }

    std::cout << "kappa_hat=" << res.kappa_hat;
    if (p_value >= 0) std::cout << " p_value=" << p_value;
    std::cout << '\n';
    return 0;
}

int cmd_noise_sweep(const std::string& families_csv, double lmin, double lmax, double lstep,
                    int runs, const GenFlags& g, const EstFlags& e, const std::string& out) {
    Timer timer;
    const auto families = parse_names(families_csv);
    CsvTable rows({"family", "lambda", "mean_kappa", "std_kappa"});
    std::vector<SvgSeries> series;
    for (const auto& fam : families) {
        SvgSeries sser{fam, {}};
        for (double lam = lmin; lam <= lmax + 1e-9; lam += lstep) {
            std::vector<double> vals;
            for (int r = 0; r < runs; ++r) {
                GeneratorSpec spec{g.n, g.dx, g.dy, lam, noise_family_from_string(fam),
                                   Rng::mix(e.seed ^ Rng::hash_role("run:" + std::to_string(r)))};
                EstFlags er = e;
                er.seed = spec.seed;
                const auto sample = gen_additive(spec).first;
                vals.push_back(
                    run_one(sample, to_config(er, static_cast<int>(sample.n()))).kappa_hat);
            }
            rows.add_row({fam, CsvTable::num(lam), CsvTable::num(mean_of(vals)),
                          CsvTable::num(std_of(vals))});
            sser.points.push_back({lam, mean_of(vals), std_of(vals)});
        }
        series.push_back(std::move(sser));
    }
    ExperimentReport rep{"noise-sweep",
                         {{"families", families_csv},
                          {"lambda_min", lmin},
                          {"lambda_max", lmax},
                          {"lambda_step", lstep},
                          {"runs", runs},
                          {"n", g.n},
                          {"d_x", g.dx},
                          {"d_y", g.dy},
                          {"estimator", config_json(e, to_config(e, g.n))}},
                         rows,
                         timer.seconds()};
    rep.write(out);
    svg_line_chart(out + "_chart.svg", "Dependence estimate vs noise scale", "lambda",
                   "mean estimate", series);
    std::cout << "wrote " << out << ".csv (" << rows.row_count() << " rows)\n";
    return 0;
}

int cmd_dim_sweep(const std::string& dims_csv, int runs, int n, double lambda, const EstFlags& e,
                  const std::string& out) {
    Timer timer;
    const auto dims = parse_ints(dims_csv);
    CsvTable rows({"d", "measure", "condition", "mean", "std"});
    SvgSeries kacim_dep{"dependent", {}}, kacim_ind{"independent", {}};
    SvgSeries dcor_dep{"dependent", {}}, dcor_ind{"independent", {}};
    for (int d : dims) {
        for (const std::string condition : {"dependent", "independent"}) {
            std::vector<double> kacim_vals, dcor_vals;
            for (int r = 0; r < runs; ++r) {
                const std::uint64_t seed = Rng::mix(
                    e.seed ^ Rng::hash_role(condition + ":" + std::to_string(d) + ":" +
                                            std::to_string(r)));
                GeneratorSpec spec{n, d, d, lambda, NoiseFamily::Gaussian, seed};
                const PairedSample sample = condition == std::string("dependent")
                                                ? gen_additive(spec).first
                                                : gen_independent(spec);
                EstFlags er = e;
                er.seed = seed;
                kacim_vals.push_back(
                    run_one(sample, to_config(er, static_cast<int>(sample.n()))).kappa_hat);
                dcor_vals.push_back(dcor_unbiased(sample.x, sample.y));
            }
            rows.add_row({std::to_string(d), "kacim", condition, CsvTable::num(mean_of(kacim_vals)),
                          CsvTable::num(std_of(kacim_vals))});
            rows.add_row({std::to_string(d), "dcor_unbiased", condition,
                          CsvTable::num(mean_of(dcor_vals)), CsvTable::num(std_of(dcor_vals))});
            auto& ks = condition == std::string("dependent") ? kacim_dep : kacim_ind;
            auto& ds = condition == std::string("dependent") ? dcor_dep : dcor_ind;
            ks.points.push_back({static_cast<double>(d), mean_of(kacim_vals), std_of(kacim_vals)});
            ds.points.push_back({static_cast<double>(d), mean_of(dcor_vals), std_of(dcor_vals)});
        }
    }
    ExperimentReport rep{"dim-sweep",
                         {{"dims", dims_csv},
                          {"runs", runs},
                          {"n", n},
                          {"lambda", lambda},
                          {"estimator", config_json(e, to_config(e, n))}},
                         rows,
                         timer.seconds()};
    rep.write(out);
    svg_line_chart(out + "_kacim.svg", "Dependence estimate vs dimension", "dimension",
                   "estimate", {kacim_dep, kacim_ind});
    svg_line_chart(out + "_dcor.svg", "Unbiased distance correlation vs dimension", "dimension",
                   "estimate", {dcor_dep, dcor_ind});
    std::cout << "wrote " << out << ".csv (" << rows.row_count() << " rows)\n";
    return 0;
}

int cmd_fx(const std::string& data_path, const std::string& label_column, bool gen_class, int n,
           int dx, int n_classes, int d_informative, const std::string& baselines_csv, int runs,
           const FxConfig& fxcfg, std::uint64_t seed, const std::string& out) {
    Timer timer;
    LabeledDataset dataset;
    std::string dataset_name;
    if (gen_class) {
        dataset = gen_classification(n, dx, n_classes, d_informative, seed);
        dataset_name = "generated";
    } else {
        if (data_path.empty() || label_column.empty()) {
            throw std::invalid_argument("fx: provide --data and --label, or --gen-class");
        }
        dataset = load_labeled_csv(data_path, label_column);
        dataset_name = data_path;
    }

    const auto baselines = parse_names(baselines_csv);
    CsvTable rows({"dataset", "baseline", "run", "selected_k", "accuracy"});
    ComparisonTable table;

    for (int r = 0; r < runs; ++r) {
        const std::uint64_t run_seed = Rng::mix(seed ^ Rng::hash_role("run:" + std::to_string(r)));
        SplitSpec sp;
        sp.seed = run_seed;
        FxConfig cfg = fxcfg;
        cfg.seed = run_seed;
        const auto results = dimension_sweep(dataset, baselines, cfg, sp);
        for (const auto& res : results) {
            rows.add_row({dataset_name, res.baseline, std::to_string(r),
                          std::to_string(res.selected_k), CsvTable::num(res.test_accuracy)});
            table.cells[{dataset_name, res.baseline}].push_back(res.test_accuracy);
        }
    }

    const auto rs = ranking_score(table, 0.01);

    json summary;
    for (const auto& [key, accs] : table.cells) {
        summary["accuracy"][key.second] = {{"mean", mean_of(accs)}, {"std", std_of(accs)}};
    }
    for (const auto& [b, score] : rs) summary["ranking_score"][b] = score;
    // pairwise one-sided p-values
    for (const auto& b : table.baseline_names()) {
        for (const auto& rival : table.baseline_names()) {
            if (b == rival) continue;
            try {
                summary["wilcoxon_p_greater"][b][rival] = wilcoxon_signed_rank(
                    table.cells.at({dataset_name, b}), table.cells.at({dataset_name, rival}),
                    WilcoxonAlternative::Greater);
            } catch (const std::invalid_argument&) {
                summary["wilcoxon_p_greater"][b][rival] = nullptr;
            }
        }
    }

    ExperimentReport rep{"fx",
                         {{"dataset", dataset_name},
                          {"baselines", baselines_csv},
                          {"runs", runs},
                          {"iterations", fxcfg.iterations},
                          {"learning_rate", fxcfg.learning_rate},
                          {"ortho_lambda", fxcfg.ortho_lambda},
                          {"batch_size", fxcfg.batch_size},
                          {"seed", seed}},
                         rows,
                         timer.seconds()};
    rep.config["summary"] = summary;
    rep.write(out);
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_gaussian_oracle(const std::string& r_csv, int n, int restarts, const EstFlags& e,
                        const std::string& out) {
    Timer timer;
    const auto r_grid = parse_doubles(r_csv);
    // Agreement with the closed-form value needs the unconstrained search:
    // the sphere-projected variant caps the reachable objective. The ascent
    // is restarted because the objective has sign-symmetric basins and a
    // single init can settle in the smaller one; the measure is a supremum,
    // so the best restart is the estimate.
    EstFlags eu = e;
    eu.no_unit_sphere = true;
    CsvTable rows({"r", "analytic", "empirical", "abs_diff"});
    for (double r : r_grid) {
        GaussianSpec g;
        g.sigma_x = Matrix::Constant(1, 1, 1.0);
        g.sigma_y = Matrix::Constant(1, 1, 1.0);
        g.sigma_xy = Matrix::Constant(1, 1, r);
        const double analytic = gaussian_kacim(g);
        const auto sample = gen_gaussian_pair(g, n, eu.seed);
        double empirical = 0.0;
        for (int s = 0; s < restarts; ++s) {
            EstFlags es = eu;
            es.seed = Rng::mix(eu.seed ^ Rng::hash_role("restart:" + std::to_string(s)));
            empirical = std::max(empirical, run_one(sample, to_config(es, n)).kappa_hat);
        }
        rows.add_row({CsvTable::num(r), CsvTable::num(analytic), CsvTable::num(empirical),
                      CsvTable::num(std::abs(analytic - empirical))});
    }
    ExperimentReport rep{"gaussian-oracle",
                         {{"r_grid", r_csv},
                          {"n", n},
                          {"restarts", restarts},
                          {"estimator", config_json(eu, to_config(eu, n))}},
                         rows,
                         timer.seconds()};
    rep.write(out);
    std::cout << "wrote " << out << ".csv (" << rows.row_count() << " rows)\n";
    return 0;
}

int cmd_gen(const std::string& type, const GenFlags& g, int n_classes, int d_informative,
            std::uint64_t seed, const std::string& out) {
    if (type == "independent" || type == "additive") {
        GeneratorSpec spec{g.n, g.dx, g.dy, g.lambda, noise_family_from_string(g.noise), seed};
        const PairedSample s =
            type == "independent" ? gen_independent(spec) : gen_additive(spec).first;
        write_matrix_csv(out + "_x.csv", s.x);
        write_matrix_csv(out + "_y.csv", s.y);
        std::cout << "wrote " << out << "_x.csv and " << out << "_y.csv\n";
        return 0;
    }
    if (type == "classification") {
        const auto d = gen_classification(g.n, g.dx, n_classes, d_informative, seed);
        Matrix m(d.n(), d.dx() + 1);
        m.leftCols(d.dx()) = d.x;
        for (Eigen::Index i = 0; i < d.n(); ++i) {
            m(i, d.dx()) = static_cast<double>(d.labels[static_cast<std::size_t>(i)]);
        }
        std::vector<std::string> header;
        for (Eigen::Index c = 0; c < d.dx(); ++c) header.push_back("f" + std::to_string(c));
        header.push_back("label");
        write_matrix_csv(out + ".csv", m, header);
        std::cout << "wrote " << out << ".csv\n";
        return 0;
    }
    throw std::invalid_argument("unknown generator type: " + type);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kac independence measure toolkit"};
    app.require_subcommand(1);

    // estimate
    auto* est = app.add_subcommand("estimate", "estimate dependence between two samples");
    std::string x_path, y_path, gen;
    GenFlags g;
    EstFlags e;
    int n_perm = 0;
    bool trace = false;
    std::string out = "kacim_estimate";
    est->add_option("--x", x_path, "CSV with x rows");
    est->add_option("--y", y_path, "CSV with y rows");
    est->add_option("--gen", gen, "generator: independent | additive");
    est->add_option("--n", g.n, "generated sample size");
    est->add_option("--dx", g.dx, "generated x dimension");
    est->add_option("--dy", g.dy, "generated y dimension");
    est->add_option("--lambda", g.lambda, "additive noise scale");
    est->add_option("--noise", g.noise, "noise family");
    est->add_option("--null", n_perm, "permutation-null size (p-value)");
    est->add_flag("--trace", trace, "write per-iteration trace CSV");
    est->add_option("--out", out, "output prefix");
    add_est_flags(est, e);

    // noise-sweep
    auto* nsw = app.add_subcommand("noise-sweep", "estimate across a noise-scale grid");
    std::string families = "gaussian,uniform,laplace,lognormal";
    double lmin = 0.1, lmax = 3.0, lstep = 0.1;
    int ns_runs = 5;
    GenFlags ng;
    EstFlags ne;
    std::string ns_out = "kacim_noise_sweep";
    nsw->add_option("--families", families, "comma-separated noise families");
    nsw->add_option("--lmin", lmin, "first noise scale");
    nsw->add_option("--lmax", lmax, "last noise scale");
    nsw->add_option("--lstep", lstep, "noise scale step");
    nsw->add_option("--runs", ns_runs, "seeded runs per point");
    nsw->add_option("--n", ng.n, "sample size");
    nsw->add_option("--dx", ng.dx, "x dimension");
    nsw->add_option("--dy", ng.dy, "y dimension");
    nsw->add_option("--out", ns_out, "output prefix");
    add_est_flags(nsw, ne);

    // dim-sweep
    auto* dsw = app.add_subcommand("dim-sweep", "compare measures across dimensions");
    std::string dims = "4,16,64,256";
    int ds_runs = 10, ds_n = 1024;
    double ds_lambda = 0.2;
    EstFlags de;
    std::string ds_out = "kacim_dim_sweep";
    dsw->add_option("--dims", dims, "comma-separated dimension grid");
    dsw->add_option("--runs", ds_runs, "seeded runs per point");
    dsw->add_option("--n", ds_n, "sample size");
    dsw->add_option("--lambda", ds_lambda, "additive noise scale");
    dsw->add_option("--out", ds_out, "output prefix");
    add_est_flags(dsw, de);

    // fx
    auto* fx = app.add_subcommand("fx", "supervised feature extraction comparison");
    std::string data_path, label_column, baselines = "raw,kacim,hsic,dcor";
    bool gen_class = false;
    int fx_n = 2000, fx_dx = 40, fx_classes = 3, fx_informative = 10, fx_runs = 25;
    FxConfig fxcfg;
    std::uint64_t fx_seed = env_default_seed();
    std::string fx_out = "kacim_fx";
    fx->add_option("--data", data_path, "labeled CSV file");
    fx->add_option("--label", label_column, "label column name");
    fx->add_flag("--gen-class", gen_class, "use the synthetic classification generator");
    fx->add_option("--n", fx_n, "generated sample size");
    fx->add_option("--dx", fx_dx, "generated input dimension");
    fx->add_option("--classes", fx_classes, "generated class count");
    fx->add_option("--informative", fx_informative, "informative dimensions");
    fx->add_option("--baselines", baselines, "comma-separated baselines");
    fx->add_option("--runs", fx_runs, "repeated runs");
    fx->add_option("--iters", fxcfg.iterations, "extractor iterations");
    fx->add_option("--lr", fxcfg.learning_rate, "learning rate");
    fx->add_option("--ortho-lambda", fxcfg.ortho_lambda, "orthogonality multiplier");
    fx->add_option("--batch", fxcfg.batch_size, "batch size");
    fx->add_option("--seed", fx_seed, "master seed");
    fx->add_option("--out", fx_out, "output prefix");

    // gaussian-oracle
    auto* go = app.add_subcommand("gaussian-oracle", "analytic vs empirical Gaussian values");
    std::string r_grid = "0,0.3,0.6,0.9";
    int go_n = 20000, go_restarts = 5;
    EstFlags ge;
    std::string go_out = "kacim_gaussian_oracle";
    go->add_option("--r", r_grid, "comma-separated correlation grid");
    go->add_option("--n", go_n, "sample size per point");
    go->add_option("--restarts", go_restarts, "ascent restarts per point");
    go->add_option("--out", go_out, "output prefix");
    add_est_flags(go, ge);

    // gen
    auto* gn = app.add_subcommand("gen", "export generated datasets as CSV");
    std::string gen_type = "additive";
    GenFlags gg;
    int gen_classes = 3, gen_informative = 10;
    std::uint64_t gen_seed = env_default_seed();
    std::string gen_out = "kacim_data";
    gn->add_option("--type", gen_type, "independent | additive | classification");
    gn->add_option("--n", gg.n, "sample size");
    gn->add_option("--dx", gg.dx, "x dimension");
    gn->add_option("--dy", gg.dy, "y dimension");
    gn->add_option("--lambda", gg.lambda, "additive noise scale");
    gn->add_option("--noise", gg.noise, "noise family");
    gn->add_option("--classes", gen_classes, "class count");
    gn->add_option("--informative", gen_informative, "informative dimensions");
    gn->add_option("--seed", gen_seed, "seed");
    gn->add_option("--out", gen_out, "output prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (est->parsed()) return cmd_estimate(x_path, y_path, gen, g, e, n_perm, trace, out);
        if (nsw->parsed()) {
            return cmd_noise_sweep(families, lmin, lmax, lstep, ns_runs, ng, ne, ns_out);
        }
        if (dsw->parsed()) return cmd_dim_sweep(dims, ds_runs, ds_n, ds_lambda, de, ds_out);
        if (fx->parsed()) {
            return cmd_fx(data_path, label_column, gen_class, fx_n, fx_dx, fx_classes,
                          fx_informative, baselines, fx_runs, fxcfg, fx_seed, fx_out);
        }
        if (go->parsed()) return cmd_gaussian_oracle(r_grid, go_n, go_restarts, ge, go_out);
        if (gn->parsed()) {
            return cmd_gen(gen_type, gg, gen_classes, gen_informative, gen_seed, gen_out);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
