#pragma once

#include <cstdint>

namespace circix {

/// splitmix64: tiny, fully specified PRNG. Used everywhere randomness is
/// needed so that the same seed reproduces byte-identical output on any
/// platform (std:: distributions are not portable across libraries).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1. Modulo bias is irrelevant at
    /// the tiny bounds used here (< 2^16).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Bernoulli(p) draw using the top 53 bits, deterministic for a given p.
    bool chance(double p) {
        return static_cast<double>(next() >> 11) < p * 9007199254740992.0;  // 2^53
    }

private:
    std::uint64_t state_;
};

}  // namespace circix
