#pragma once

#include <cstdint>

// Counter-based random number generation (Philox 4x32-10).
//
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3", SC 2011.
// Every draw is a pure function of (seed, stream, index), so sampling order
// and worker count never affect the output.

namespace topix {

struct PhiloxCounter {
    std::uint32_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
};

struct PhiloxKey {
    std::uint32_t k0 = 0, k1 = 0;
};

// One full 10-round Philox 4x32 block.
PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key);

// 64 random bits for the given (seed, stream, index) triple.
std::uint64_t counter_bits64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Uniform double strictly inside (0,1), derived from counter_bits64.
double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

} // namespace topix
