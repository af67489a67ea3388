// Counter-based random streams: every draw is a pure function of
// (seed, counter), so parallel users can index draws by voxel/frame and
// get schedule-independent output.
#pragma once

#include <cmath>
#include <cstdint>

namespace ctp {

/// splitmix64 finalizer (bijective 64-bit mix).
inline std::uint64_t mix_u64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t h = mix_u64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix_u64(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = mix_u64(h ^ (b + 0x3c6ef372fe94f82bULL));
    return h;
}

/// Uniform in [0,1), never exactly 1.
inline double uniform_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return uniform_from_bits(hash_combine(seed, a, b));
}

/// Standard normal via Box-Muller on two counter-derived uniforms.
inline double counter_gaussian(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    const std::uint64_t h = hash_combine(seed, a, b);
    const double u1 = uniform_from_bits(h) + 0x1.0p-54;  // avoid log(0)
    const double u2 = uniform_from_bits(mix_u64(h ^ 0x165667b19e3779f9ULL));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

/// Small sequential stream for scene generation and weight init.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix_u64(state_);
    }
    double next_uniform() { return uniform_from_bits(next_u64()); }
    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }
    /// Integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace ctp
