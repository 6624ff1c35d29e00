#pragma once

#include <cstdint>
#include <random>

namespace evoart {

// Seeded random source with a fixed draw discipline. All stochastic
// operators consume exactly the draws documented at their call sites,
// so a (seed, config) pair replays bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling,
    // no reliance on unspecified std::uniform_int_distribution behavior.
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform real in [0, 1) with 53 random bits.
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace evoart
