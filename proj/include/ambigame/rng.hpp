#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ambigame {

/// Deterministic random source. Draws are derived from raw mt19937_64 words
/// instead of std::uniform_*_distribution so that a seed produces the same
/// stream on every standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    /// Strictly positive weights normalized to sum to one.
    std::vector<double> probability_vector(int size) {
        std::vector<double> w(static_cast<std::size_t>(size));
        double total = 0.0;
        for (double& x : w) {
            x = 0.05 + uniform();
            total += x;
        }
        for (double& x : w) x /= total;
        return w;
    }

    std::uint64_t next_word() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace ambigame
