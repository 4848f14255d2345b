#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>

namespace nodeshift {

/// Per-run random stream. Wraps mt19937_64 with explicit draw arithmetic so
/// that results depend only on the seed, not on the standard library's
/// distribution implementations. Every GA run owns exactly one of these.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling, unbiased.
    int uniform_int(int lo, int hi) {
        assert(lo <= hi);
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<int>(draw % span);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace nodeshift
