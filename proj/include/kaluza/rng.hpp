#pragma once

// Seeded 64-bit multiplicative congruential generator used by verify, bench
// and the tests, so every report is reproducible on any platform.
//
//   state_{n+1} = state_n * 0xf1357aea2e62a9c5  (mod 2^64)
//   seed s      -> state_0 = 2s + 1, then 4 outputs are discarded
//   output      -> high 32 bits of the new state
//
// Integers in [lo, hi] use the 32x32 -> 64 multiply-shift range reduction on
// one output. Reals in [-1, 1] take 53 bits from two outputs.

#include <cstdint>

#include "kaluza/number.hpp"

namespace kaluza {

class Mcg64 {
public:
    static constexpr std::uint64_t kMultiplier = 0xf1357aea2e62a9c5ULL;
    static constexpr int kWarmup = 4;

    explicit Mcg64(std::uint64_t seed = 1) noexcept : state_(2 * seed + 1) {
        for (int i = 0; i < kWarmup; ++i) {
            next();
        }
    }

    std::uint32_t next() noexcept {
        state_ *= kMultiplier;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform in [lo, hi]; requires hi - lo < 2^32.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>((static_cast<std::uint64_t>(next()) * range) >> 32);
    }

    /// Uniform on the 2^53 grid of [0, 1).
    double unit() noexcept {
        const std::uint64_t hi = next();
        const std::uint64_t lo = next();
        return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-1, 1).
    double symmetric() noexcept { return 2.0 * unit() - 1.0; }

private:
    std::uint64_t state_;
};

/// Bound used for bit-exact random operands.
inline constexpr std::int64_t kIntegerBound = 1024;

/// Coefficients uniform over the integers in [-bound, bound].
KaluzaNumber random_integer_number(Mcg64& rng, std::int64_t bound = kIntegerBound);

/// Coefficients uniform in [-1, 1).
KaluzaNumber random_real_number(Mcg64& rng);

}  // namespace kaluza
