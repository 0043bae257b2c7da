#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace viko {

// Deterministic RNG. std::mt19937 output is bit-exact per the standard, but the
// standard distributions are not, so the uniform/normal transforms live here.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(static_cast<uint32_t>(seed ^ (seed >> 32))) {}

    uint32_t next_u32() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() {
        return next_u32() * (1.0 / 4294967296.0);
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

    // Box-Muller, one value per call (the pair's second half is cached).
    double normal(double mean = 0.0, double sigma = 1.0) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sigma * spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return mean + sigma * r * std::cos(a);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform() * static_cast<double>(i));
            std::swap(v[i - 1], v[j < i ? j : i - 1]);
        }
    }

private:
    std::mt19937 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace viko
