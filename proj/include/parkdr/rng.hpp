#pragma once

#include <cmath>
#include <cstdint>

namespace parkdr {

// Seeded pseudorandom stream with a fully specified algorithm so that
// generated series are bit-identical across platforms and compilers
// (std::normal_distribution is implementation-defined, so it is not used
// anywhere determinism matters).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi].
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Standard normal via Box-Muller (one draw per call, second discarded
    // to keep the stream position independent of call pairing).
    double next_gaussian() {
        double u1 = next_unit();
        const double u2 = next_unit();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Derive an independent stream for a substream index (e.g. one per day).
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 s(seed ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
        return s.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace parkdr
