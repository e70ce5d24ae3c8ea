#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "weylcdma/types.hpp"

namespace weylcdma {

/// splitmix64 step: advances the state by the golden-ratio increment and
/// returns a scrambled output. Consecutive outputs from any 64-bit key are
/// statistically independent, which makes it a convenient counter-based
/// generator: hash a tuple of identifiers into a key, then stream from it.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Order-sensitive combine for deriving stream keys from several fields.
inline std::uint64_t mix_key(std::uint64_t acc, std::uint64_t field) {
    acc ^= field + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
    std::uint64_t s = acc;
    return splitmix64(s);
}

/// Small deterministic stream seeded by a derived key. Every symbol in the
/// simulator gets its own stream, so results do not depend on evaluation
/// order.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform index in [0, n). Multiply-shift map; bias is below 2^-32 for
    /// any n that fits an int.
    int next_index(int n) {
        return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                                 static_cast<unsigned __int128>(n)) >>
                                64);
    }

    /// Fair draw from {-1, +1}.
    int next_sign() { return (next_u64() >> 63) ? 1 : -1; }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> next_normal_pair() {
        double u1 = next_double();
        // Guard the log: push 0 to the smallest representable uniform.
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = kTwoPi * next_double();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

   private:
    std::uint64_t state_;
};

}  // namespace weylcdma
