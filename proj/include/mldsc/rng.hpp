#pragma once

#include <array>
#include <cstdint>

namespace mldsc::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011). Stateless:
// any (counter, key) pair maps to 128 random bits, so per-sample streams are
// independent of execution order and worker count.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

uint64_t splitmix64(uint64_t x);

// Sequential N(0,1) stream for one (seed, domain, sample, purpose) tuple.
// Consecutive Philox blocks feed Box-Muller pairs; the block index is the
// only evolving state.
class NormalStream {
  public:
    NormalStream(uint64_t seed, uint64_t domain, uint64_t sample, uint32_t purpose);
    double next();

  private:
    std::array<uint32_t, 2> key_;
    uint32_t sample_lo_ = 0;
    uint32_t sample_hi_xor_purpose_ = 0;
    uint64_t block_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace mldsc::rng
