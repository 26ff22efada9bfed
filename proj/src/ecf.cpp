#include "kacim/ecf.hpp"

#include <stdexcept>

namespace kacim {

namespace {

constexpr double kModulusEps = 1e-12;

void check_dims(const PairedSample& s, const FrequencyPoint& f) {
    if (f.alpha.size() != s.dx() || f.beta.size() != s.dy()) {
        throw std::invalid_argument("frequency dimensions do not match the sample");
    }
}

}  // namespace

Cx ecf(const Matrix& m, const Vector& freq) {
    if (m.cols() != freq.size()) {
        throw std::invalid_argument("ecf: matrix has " + std::to_string(m.cols()) +
                                    " columns, frequency has " + std::to_string(freq.size()));
    }
    if (m.rows() < 1) throw std::invalid_argument("ecf: empty sample");
    const Vector phase = m * freq;
    const double n = static_cast<double>(m.rows());
    double re = 0.0, im = 0.0;
    for (Eigen::Index j = 0; j < phase.size(); ++j) {
        re += std::cos(phase[j]);
        im += std::sin(phase[j]);
    }
    return {re / n, im / n};
}

Cx joint_ecf(const PairedSample& s, const FrequencyPoint& f) {
    check_dims(s, f);
    const Vector phase = s.x * f.alpha + s.y * f.beta;
    const double n = static_cast<double>(s.n());
    double re = 0.0, im = 0.0;
    for (Eigen::Index j = 0; j < phase.size(); ++j) {
        re += std::cos(phase[j]);
        im += std::sin(phase[j]);
    }
    return {re / n, im / n};
}

Cx delta_n(const PairedSample& s, const FrequencyPoint& f) {
    check_dims(s, f);
    return joint_ecf(s, f) - ecf(s.x, f.alpha) * ecf(s.y, f.beta);
}

DeltaGradient delta_n_grad(const PairedSample& s, const FrequencyPoint& f) {
    check_dims(s, f);
    const Eigen::Index n = s.n();
    const double inv_n = 1.0 / static_cast<double>(n);

    const Vector px = s.x * f.alpha;
    const Vector py = s.y * f.beta;

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

    DeltaGradient g;
    g.value = phi - u * v;

    // d/d alpha_k of phi: (1/n) sum_j x_jk * i * e^{i(px+py)} = (-sj, cj) weighted
    const Vector ja_re = s.x.transpose() * (-sj) * inv_n;
    const Vector ja_im = s.x.transpose() * cj * inv_n;
    // marginal term: (1/n) sum_j x_jk * i * e^{i px}
    const Vector ma_re = s.x.transpose() * (-sx) * inv_n;
    const Vector ma_im = s.x.transpose() * cx * inv_n;

    g.d_alpha.resize(static_cast<std::size_t>(s.dx()));
    for (Eigen::Index k = 0; k < s.dx(); ++k) {
        const Cx joint{ja_re[k], ja_im[k]};
        const Cx marg{ma_re[k], ma_im[k]};
        g.d_alpha[static_cast<std::size_t>(k)] = joint - marg * v;
    }

    const Vector jb_re = s.y.transpose() * (-sj) * inv_n;
    const Vector jb_im = s.y.transpose() * cj * inv_n;
    const Vector mb_re = s.y.transpose() * (-sy) * inv_n;
    const Vector mb_im = s.y.transpose() * cy * inv_n;

    g.d_beta.resize(static_cast<std::size_t>(s.dy()));
    for (Eigen::Index k = 0; k < s.dy(); ++k) {
        const Cx joint{jb_re[k], jb_im[k]};
        const Cx marg{mb_re[k], mb_im[k]};
        g.d_beta[static_cast<std::size_t>(k)] = joint - u * marg;
    }
    return g;
}

Cx smoothed_delta_n(const PairedSample& s, const FrequencyPoint& f, const SmoothingSpec& sm) {
    if (sm.h < 0.0) throw std::invalid_argument("smoothed_delta_n: negative bandwidth");
    const Cx d = delta_n(s, f);
    if (sm.h == 0.0) return d;
    // Gaussian kernel factors across (alpha, beta), so the smoothed
    // discrepancy is the plain one damped by exp(-h^2 (|a|^2 + |b|^2) / 2).
    const double damp =
        std::exp(-0.5 * sm.h * sm.h * (f.alpha.squaredNorm() + f.beta.squaredNorm()));
    return d * damp;
}

ModulusGradient delta_modulus_grad(const PairedSample& s, const FrequencyPoint& f, double h) {
    if (h < 0.0) throw std::invalid_argument("delta_modulus_grad: negative bandwidth");
    const DeltaGradient g = delta_n_grad(s, f);
    const double mod = g.value.modulus();

    ModulusGradient out;
    out.d_alpha = Vector::Zero(s.dx());
    out.d_beta = Vector::Zero(s.dy());

    if (mod >= kModulusEps) {
        const Cx dir = g.value.conj() * (1.0 / mod);
        for (Eigen::Index k = 0; k < s.dx(); ++k) {
            const Cx& c = g.d_alpha[static_cast<std::size_t>(k)];
            out.d_alpha[k] = dir.re * c.re - dir.im * c.im;
        }
        for (Eigen::Index k = 0; k < s.dy(); ++k) {
            const Cx& c = g.d_beta[static_cast<std::size_t>(k)];
            out.d_beta[k] = dir.re * c.re - dir.im * c.im;
        }
    }
    out.value = mod;

    if (h > 0.0) {
        const double damp =
            std::exp(-0.5 * h * h * (f.alpha.squaredNorm() + f.beta.squaredNorm()));
        out.d_alpha = damp * (out.d_alpha - h * h * mod * f.alpha);
        out.d_beta = damp * (out.d_beta - h * h * mod * f.beta);
        out.value = damp * mod;
    }
    return out;
}

}  // namespace kacim
