#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace kacim {

// Deterministic, platform-independent random stream. Substreams are derived
// from (seed, role) so that e.g. the x-stream and the noise-stream of a
// generator stay independent and stable when only one of them is consumed.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t hash_role(std::string_view role) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (unsigned char c : role) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    // stream id = hash(seed, role)
    static Rng stream(std::uint64_t seed, std::string_view role) {
        return Rng(mix(seed ^ hash_role(role)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // Box-Muller; u strictly positive
        double u = 0.0;
        do {
            u = uniform();
        } while (u <= 0.0);
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // zero mean, unit variance
    double laplace_unit() {
        const double b = 1.0 / std::numbers::sqrt2;
        const double u = uniform() - 0.5;
        const double a = std::abs(u);
        return u >= 0.0 ? -b * std::log(1.0 - 2.0 * a) : b * std::log(1.0 - 2.0 * a);
    }

    // zero mean, unit variance
    double uniform_unit() {
        constexpr double half_width = 1.7320508075688772;  // sqrt(3)
        return (2.0 * uniform() - 1.0) * half_width;
    }

    // exp(N(0,1)) shifted and scaled to zero mean, unit variance
    double lognormal_unit() {
        const double e = std::numbers::e;
        const double mean = std::exp(0.5);
        const double sd = std::sqrt((e - 1.0) * e);
        return (std::exp(normal()) - mean) / sd;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = n - 1; i > 0; --i) {
            const int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(idx[i], idx[j]);
        }
        return idx;
    }

    // k distinct indices from 0..n-1 (partial Fisher-Yates)
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace kacim
