#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace malcev {

// Default seed used by the CLI and the randomized checks when none is given.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Deterministic random source for all sampled checks and artifacts.
//
// Uniform deviates are taken from the top 53 bits of the raw mt19937_64
// stream and normal deviates from an explicit Box-Muller transform, so a
// given seed produces the same byte stream on every platform and standard
// library. std::uniform_real_distribution / std::normal_distribution are
// implementation-defined and must not be used anywhere output determinism
// matters.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Eigen::VectorXd gaussian(int n) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

    // Uniformly distributed unit vector (normalized Gaussian).
    Eigen::VectorXd unit(int n) {
        for (;;) {
            Eigen::VectorXd v = gaussian(n);
            const double s = v.norm();
            if (s > 1e-12) return v / s;
        }
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace malcev
