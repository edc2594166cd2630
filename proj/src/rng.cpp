#include "topix/rng.hpp"

namespace topix {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

inline PhiloxCounter round_once(PhiloxCounter c, PhiloxKey k) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kPhiloxM0, c.c0, hi0, lo0);
    mul_hi_lo(kPhiloxM1, c.c2, hi1, lo1);
    return {hi1 ^ c.c1 ^ k.k0, lo1, hi0 ^ c.c3 ^ k.k1, lo0};
}

} // namespace

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) {
    for (int r = 0; r < 10; ++r) {
        ctr = round_once(ctr, key);
        if (r < 9) {
            key.k0 += kPhiloxW0;
            key.k1 += kPhiloxW1;
        }
    }
    return ctr;
}

std::uint64_t counter_bits64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const PhiloxKey key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const PhiloxCounter ctr{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                            static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    const PhiloxCounter out = philox4x32(ctr, key);
    return (static_cast<std::uint64_t>(out.c0) << 32) | out.c1;
}

double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    // 53 random bits, offset by half a step: values lie strictly inside (0,1).
    const std::uint64_t bits = counter_bits64(seed, stream, index) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

} // namespace topix
