#pragma once

#include <cstdint>
#include <string_view>

namespace forge {

// Deterministic RNG with hand-rolled distributions so that sampled values do
// not depend on the standard library implementation. splitmix64 for seeding,
// xoshiro256++ as the generator.
class Rng {
  public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    // uniform in [0,1)
    double uniform();
    double uniform(double lo, double hi);
    // inclusive bounds
    int64_t uniform_int(int64_t lo, int64_t hi);
    // standard normal via Box-Muller
    double normal();
    double normal(double mean, double stddev);
    bool coin() { return (next_u64() >> 63) != 0; }

    // Independent substream for stage `label` / index `idx`; used to give
    // every pipeline stage and pool entry its own reproducible stream.
    Rng substream(std::string_view label, uint64_t idx = 0) const;

  private:
    uint64_t s_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
    uint64_t seed_ = 0;
};

// Stable 64-bit string hash (FNV-1a), used for substream derivation and for
// hashing tokens into embedding buckets.
uint64_t fnv1a64(std::string_view s);

} // namespace forge
