#pragma once

#include <array>
#include <cstdint>

namespace crowdflux::rng {

// Philox4x32-10 counter-based generator. Every draw is a pure function of
// (key, counter), so parallel callers get identical streams regardless of
// scheduling.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        std::uint32_t key0, std::uint32_t key1);

// Draw families. Keeping them in separate streams means e.g. initial-position
// sampling can never collide with the per-step noise counters.
enum class Stream : std::uint32_t {
    noise = 0,     // Euler-Maruyama increments
    init = 1,      // particle initialisation from continuum data
    sweep = 2,     // per-run seed derivation
    generic = 3,   // test generators
};

// Uniform in the open interval (0, 1).
double uniform01(std::uint64_t seed, Stream stream, std::uint64_t step,
                 std::uint64_t index, std::uint32_t sub);

// Standard normal via Box-Muller on one Philox block.
double normal(std::uint64_t seed, Stream stream, std::uint64_t step,
              std::uint64_t index, std::uint32_t sub);

// Independent sub-seed for run `run_index` of a sweep.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t run_index);

}  // namespace crowdflux::rng
