#pragma once

#include <cmath>
#include <vector>

#include "kacim/data.hpp"

namespace kacim {

// Complex values carried as explicit (re, im) pairs; exponentials are
// evaluated as (cos, sin) so the summation order stays under our control.
struct Cx {
    double re = 0.0;
    double im = 0.0;

    double modulus() const { return std::sqrt(re * re + im * im); }
    Cx conj() const { return {re, -im}; }

    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Cx operator*(double s) const { return {re * s, im * s}; }
};

struct FrequencyPoint {
    Vector alpha;  // d_x
    Vector beta;   // d_y
};

enum class SmoothingKernel { Gaussian };

struct SmoothingSpec {
    double h = 0.0;
    SmoothingKernel kernel = SmoothingKernel::Gaussian;
};

struct DeltaGradient {
    Cx value;
    std::vector<Cx> d_alpha;
    std::vector<Cx> d_beta;
};

// Gradient of the ascent objective |Delta_n| with the epsilon guard: the
// gradient is the zero vector when |Delta_n| < 1e-12.
struct ModulusGradient {
    double value = 0.0;
    Vector d_alpha;
    Vector d_beta;
};

Cx ecf(const Matrix& m, const Vector& freq);
Cx joint_ecf(const PairedSample& s, const FrequencyPoint& f);
Cx delta_n(const PairedSample& s, const FrequencyPoint& f);
DeltaGradient delta_n_grad(const PairedSample& s, const FrequencyPoint& f);

Cx smoothed_delta_n(const PairedSample& s, const FrequencyPoint& f, const SmoothingSpec& sm);

// |Delta_n| (damped by the Gaussian kernel when h > 0) and its gradient.
ModulusGradient delta_modulus_grad(const PairedSample& s, const FrequencyPoint& f,
                                   double h = 0.0);

}  // namespace kacim
