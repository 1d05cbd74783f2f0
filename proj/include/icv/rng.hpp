#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "icv/vec.hpp"

namespace icv {

// Seeded generator with hand-rolled uniform/normal mappings.
// std::uniform_real_distribution is implementation-defined, so we map raw
// mt19937_64 bits ourselves to keep output reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }

    // Standard normal via Box-Muller (cached spare).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        while (u <= 0.0) u = u01();
        double v = u01();
        double r = std::sqrt(-2.0 * std::log(u));
        double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Vector normal_vector(std::size_t n) {
        std::vector<double> c(n);
        for (auto& v : c) v = normal();
        return Vector(std::move(c));
    }

    // Uniform direction on the unit sphere.
    Vector unit_vector(std::size_t n) {
        for (;;) {
            Vector v = normal_vector(n);
            double r = v.norm2();
            if (r > 1e-12) return (1.0 / r) * v;
        }
    }

    // Uniform barycentric weights on the simplex (exponential spacings).
    std::vector<double> simplex_weights(std::size_t k) {
        std::vector<double> w(k);
        double s = 0;
        for (auto& v : w) {
            double u = 0.0;
            while (u <= 0.0) u = u01();
            v = -std::log(u);
            s += v;
        }
        for (auto& v : w) v /= s;
        return w;
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace icv
