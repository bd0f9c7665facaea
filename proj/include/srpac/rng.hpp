#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace srpac {

// SplitMix64: counter-based generator with a strong finalizer. One instance
// per Monte-Carlo trial keeps parallel runs independent of worker count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log argument.
    double next_unit_open_low() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    bool next_bit() { return next_u64() >> 63; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_bits(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Derives the seed of an independent stream from (seed, a, b), e.g.
// (run seed, SNR index, trial index).
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix_bits(seed + 0x9e3779b97f4a7c15ull);
    h = mix_bits(h ^ (a + 0xbf58476d1ce4e5b9ull));
    h = mix_bits(h ^ (b + 0x94d049bb133111ebull));
    return h;
}

// Standard normal draws via Box-Muller on top of a SplitMix64 stream.
class GaussianSampler {
public:
    explicit GaussianSampler(SplitMix64& rng) : rng_(rng) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_unit_open_low();
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    SplitMix64& rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace srpac
