#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "hhlow/errors.hpp"

namespace hhlow {

/// Periodic box [0,2π)³ sampled at n points per dimension. Frequencies are
/// integer triples with each component in [−n/2, n/2−1]; |k| is exact from
/// the integer components. n must be even and in [8, 1024] — mixed radix is
/// fine (the sweep's grid rule n = 5λ is the common case).
struct Grid3 {
    int n = 0;

    static constexpr double period = 6.283185307179586476925286766559;  // 2π

    int nyquist_bound() const { return n / 2 - 1; }
    std::int64_t total_points() const { return std::int64_t(n) * n * n; }
    double cell_volume() const {
        double h = period / n;
        return h * h * h;
    }

    /// Signed frequency for storage index i ∈ [0, n).
    int freq_of_index(int i) const { return i < n / 2 ? i : i - n; }
    /// Storage index of signed frequency k ∈ [−n/2, n/2−1].
    int index_of_freq(int k) const { return k >= 0 ? k : k + n; }

    std::int64_t flat_index(int ix, int iy, int iz) const {
        return (std::int64_t(ix) * n + iy) * n + iz;
    }

    bool operator==(const Grid3& o) const { return n == o.n; }
    bool operator!=(const Grid3& o) const { return n != o.n; }
};

inline Grid3 make_grid(int n) {
    if (n < 8 || n > 1024) {
        throw config_error("grid size n=" + std::to_string(n) + " outside [8, 1024]");
    }
    if (n % 2 != 0) {
        throw config_error("grid size n=" + std::to_string(n) + " must be even");
    }
    return Grid3{n};
}

/// Checks that the dyadic annulus (λ/2, 2λ) sits below the Nyquist bound.
inline void require_annulus_fits(const Grid3& g, int lambda) {
    if (2 * lambda > g.nyquist_bound()) {
        throw geometry_error("annulus for lambda=" + std::to_string(lambda) +
                             " exceeds Nyquist bound " + std::to_string(g.nyquist_bound()) +
                             " on n=" + std::to_string(g.n));
    }
}

inline bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace hhlow
