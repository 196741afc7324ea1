#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace finsler {

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, counter), so sweeps are reproducible and order-independent.
struct CounterRng {
    std::uint64_t seed = 0;

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(mix(seed) ^ mix(counter + 0x632be59bd9b4e019ULL));
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform on (lo, hi), endpoints excluded at double resolution.
    double uniform(std::uint64_t counter, double lo, double hi) const {
        double t = (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
        return lo + t * (hi - lo);
    }

    /// Standard normal via Box-Muller on two derived counters.
    double normal(std::uint64_t counter) const {
        double u1 = (static_cast<double>(bits(2 * counter) >> 11) + 0.5) * 0x1.0p-53;
        double u2 = uniform(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Uniform direction on the unit sphere in R^n.
    Eigen::VectorXd sphere(std::uint64_t counter, int n) const {
        Eigen::VectorXd y(n);
        std::uint64_t base = counter * 64ULL;
        while (true) {
            for (int i = 0; i < n; ++i) y[i] = normal(base + i);
            double r = y.norm();
            if (r > 1e-8) return y / r;
            base += n;  // astronomically unlikely
        }
    }
};

}  // namespace finsler
