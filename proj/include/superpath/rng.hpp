#pragma once

#include <cstdint>
#include <random>

namespace superpath {

// Deterministic pseudo-random source.  All randomized tests and CLI commands
// derive their streams from an explicit 64-bit seed so that a given seed
// reproduces byte-identical runs on any platform (the helpers below avoid
// std::uniform_real_distribution, whose output is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform double in [lo, hi) with 53 random mantissa bits.
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

    // Uniform integer in [0, n).  The slight modulo bias is irrelevant for
    // test-case generation and keeps the stream platform-stable.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool coin() { return (engine_() & 1) != 0; }

    // Stable derivation of an independent child seed (splitmix64 step), so a
    // loop of instances can give each instance its own reproducible stream.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace superpath
