#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace advattr {

// SplitMix64 counter generator. The k-th output (0-based) for a given seed is
// mix(seed + (k+1) * 0x9E3779B97F4A7C15), so the stream is a pure function of
// (seed, k) and reproduces bit-for-bit on any platform with 64-bit integers.
// All randomness in this library (dataset synthesis, weight init, shuffles,
// PGD starts) flows through this generator; seeds in file formats and configs
// refer to it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, n). Modulo reduction; the bias is immaterial for
    // n far below 2^64 and keeps the draw count per call fixed at one.
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

private:
    std::uint64_t state_;
};

// Derives an independent child seed from (seed, stream). Used to split one
// user-facing seed into per-purpose streams (init vs. shuffle vs. noise) and
// per-sample attack seeds without correlating them.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 rng(seed ^ (stream * 0xD1B54A32D192ED03ULL));
    return rng.next_u64();
}

template <typename T>
void shuffle_indices(std::vector<T>& idx, SplitMix64& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(idx[i - 1], idx[j]);
    }
}

} // namespace advattr
