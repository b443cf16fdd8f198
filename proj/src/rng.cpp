#include "crowdflux/rng.hpp"

#include <cmath>
#include <numbers>

namespace crowdflux::rng {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

inline std::array<std::uint32_t, 4> block(std::uint64_t seed, Stream stream, std::uint64_t step,
                                          std::uint64_t index, std::uint32_t sub) {
    // sub < 2^12; step may use up to 44 bits.
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(step),
        (static_cast<std::uint32_t>(stream) << 28) | ((sub & 0xFFFu) << 16) |
            (static_cast<std::uint32_t>(step >> 32) & 0xFFFFu),
    };
    return philox4x32(ctr, static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32));
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        std::uint32_t key0, std::uint32_t key1) {
    std::array<std::uint32_t, 4> c = counter;
    std::uint32_t k0 = key0;
    std::uint32_t k1 = key1;
    round_once(c, k0, k1);
    for (int r = 1; r < 10; ++r) {
        k0 += kWeyl0;
        k1 += kWeyl1;
        round_once(c, k0, k1);
    }
    return c;
}

double uniform01(std::uint64_t seed, Stream stream, std::uint64_t step,
                 std::uint64_t index, std::uint32_t sub) {
    const auto w = block(seed, stream, step, index, sub);
    return to_unit(w[0], w[1]);
}

double normal(std::uint64_t seed, Stream stream, std::uint64_t step,
              std::uint64_t index, std::uint32_t sub) {
    const auto w = block(seed, stream, step, index, sub);
    const double u1 = to_unit(w[0], w[1]);
    const double u2 = to_unit(w[2], w[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    const auto w = block(base_seed, Stream::sweep, 0, run_index, 0);
    return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

}  // namespace crowdflux::rng
