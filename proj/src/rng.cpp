#include "mldsc/rng.hpp"

#include <cmath>

namespace mldsc::rng {

namespace {

constexpr uint32_t kMult0 = 0xD2511F53u;
constexpr uint32_t kMult1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void mul_hi_lo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
    const uint64_t prod = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(prod >> 32);
    lo = static_cast<uint32_t>(prod);
}

inline double to_unit(uint32_t hi, uint32_t lo) {
    const uint64_t bits = (static_cast<uint64_t>(hi) << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        uint32_t hi0, lo0, hi1, lo1;
        mul_hi_lo(kMult0, counter[0], hi0, lo0);
        mul_hi_lo(kMult1, counter[2], hi1, lo1);
        counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

NormalStream::NormalStream(uint64_t seed, uint64_t domain, uint64_t sample,
                           uint32_t purpose) {
    const uint64_t k = splitmix64(seed ^ splitmix64(domain));
    key_ = {static_cast<uint32_t>(k), static_cast<uint32_t>(k >> 32)};
    sample_lo_ = static_cast<uint32_t>(sample);
    sample_hi_xor_purpose_ = static_cast<uint32_t>(sample >> 32) ^ (purpose << 24);
}

double NormalStream::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const std::array<uint32_t, 4> bits =
        philox4x32({static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                    sample_lo_, sample_hi_xor_purpose_},
                   key_);
    ++block_;

    const double u1 = 1.0 - to_unit(bits[0], bits[1]);  // (0, 1]
    const double u2 = to_unit(bits[2], bits[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

}  // namespace mldsc::rng
