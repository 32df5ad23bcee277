#pragma once

#include <cmath>
#include <cstdint>

namespace levyopt {

// Counter-based stream: output k of stream (seed, stream_id) is a splitmix64
// finalizer applied to key + k*gamma. Streams are independent of execution
// order, so parallel and serial runs agree bit for bit.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id)
        : key_(mix(mix(seed + kGamma) ^ mix(stream_id * kGamma + 0xD1B54A32D192ED03ULL))) {}

    std::uint64_t next_u64() { return mix(key_ + (counter_++) * kGamma); }

    // uniform in [0, 1), 53 bits
    double u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Exp(1)
    double exponential() { return -std::log1p(-u01()); }

    double normal();

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace levyopt
