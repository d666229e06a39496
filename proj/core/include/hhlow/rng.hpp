#pragma once

#include <cmath>
#include <cstdint>

namespace hhlow {

// Counter-based generator: every draw is a pure function of (key, counter),
// so parallel synthesis is order-independent and replayable. The mixer is
// splitmix64's finalizer applied to an accumulated key, which is plenty for
// Monte Carlo geometry sampling (not cryptographic).

namespace rng_detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

}  // namespace rng_detail

/// Uniform in [0,1) from a keyed counter.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t h = rng_detail::combine(rng_detail::mix64(key), counter);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Standard normal via Box–Muller on two keyed uniforms.
inline double gaussian(std::uint64_t key, std::uint64_t counter) {
    double u1 = uniform01(key, 2 * counter);
    double u2 = uniform01(key, 2 * counter + 1);
    if (u1 <= 0x1.0p-60) u1 = 0x1.0p-60;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

/// Key for a (seed, k, component) coefficient draw.
inline std::uint64_t coeff_key(std::uint64_t seed, int kx, int ky, int kz, int component) {
    using rng_detail::combine;
    std::uint64_t h = rng_detail::mix64(seed);
    h = combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(kx)));
    h = combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(ky)));
    h = combine(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(kz)));
    h = combine(h, static_cast<std::uint64_t>(component));
    return h;
}

/// Explicit-value sampler state: passing it by value and returning the
/// advanced copy keeps deterministic parallel fan-out trivial.
struct RngState {
    std::uint64_t key = 0;
    std::uint64_t counter = 0;

    static RngState keyed(std::uint64_t seed, std::uint64_t stream) {
        return {rng_detail::combine(rng_detail::mix64(seed), stream), 0};
    }

    double next_uniform() { return uniform01(key, counter++); }
    double next_gaussian() { return gaussian(key, counter++); }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }
};

}  // namespace hhlow
