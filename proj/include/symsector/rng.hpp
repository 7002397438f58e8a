#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace symsector {

// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937 +
// std::normal_distribution because the standard distributions are
// implementation-defined; every draw here is fixed bit-for-bit across
// platforms so seeded runs replay identically.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [0,1): top 53 bits of the stream.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0,1], safe as a log argument.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; consumes two uniforms per pair and
    // caches the second value.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Complex standard normal with unit total variance.
    std::complex<double> gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * 0.7071067811865475244, im * 0.7071067811865475244};
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Substream split rule: trial k of master seed s starts from
// mix(s + GOLDEN * (k + 1)). Used wherever independent per-trial streams are
// needed (fuzzing, parallel sampling), so trial k is reproducible in
// isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64::mix(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

} // namespace symsector
