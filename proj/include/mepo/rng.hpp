#pragma once

#include <array>
#include <cmath>
#include <cstdint>

// Philox4x32-10 counter-based generator. Every variate is addressed by a
// (path, stage, slot) counter, so path p draws the same numbers no matter
// how many paths are simulated or in what order.

namespace mepo {

class Philox {
  public:
    explicit Philox(std::uint64_t seed) : key_{static_cast<std::uint32_t>(seed),
                                               static_cast<std::uint32_t>(seed >> 32)} {}

    // Four 32-bit words for counter (c0, c1, c2, c3).
    std::array<std::uint32_t, 4> block(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                                       std::uint32_t c3) const {
        std::array<std::uint32_t, 4> ctr{c0, c1, c2, c3};
        std::uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = kMul0 * static_cast<std::uint64_t>(ctr[0]);
            const std::uint64_t p1 = kMul1 * static_cast<std::uint64_t>(ctr[2]);
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        return ctr;
    }

    // Uniform in (0, 1), never exactly 0 or 1.
    double uniform(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                   std::uint32_t c3) const {
        const auto w = block(c0, c1, c2, c3);
        const std::uint64_t bits =
            (static_cast<std::uint64_t>(w[0]) << 32) | static_cast<std::uint64_t>(w[1]);
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal addressed by (path, stage, slot) via Box-Muller.
    double normal(std::uint64_t path, std::uint32_t stage, std::uint32_t slot) const {
        const auto w = block(static_cast<std::uint32_t>(path),
                             static_cast<std::uint32_t>(path >> 32), stage, slot);
        const std::uint64_t b0 =
            (static_cast<std::uint64_t>(w[0]) << 32) | static_cast<std::uint64_t>(w[1]);
        const std::uint64_t b1 =
            (static_cast<std::uint64_t>(w[2]) << 32) | static_cast<std::uint64_t>(w[3]);
        const double u1 = (static_cast<double>(b0 >> 11) + 0.5) * 0x1.0p-53;
        const double u2 = (static_cast<double>(b1 >> 11) + 0.5) * 0x1.0p-53;
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

  private:
    static constexpr std::uint64_t kMul0 = 0xD2511F53ull;
    static constexpr std::uint64_t kMul1 = 0xCD9E8D57ull;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::array<std::uint32_t, 2> key_;
};

// SplitMix64: used to derive independent sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace mepo
