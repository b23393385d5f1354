#pragma once

#include <cstdint>

namespace wf {

/// Counter-based generator (SplitMix64 finalizer over an incrementing
/// counter). Streams are fully determined by (seed, stream index), so
/// parallel and serial replicate runs produce identical draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform on [0,1).
    double next_unit();

    /// Uniform on (0,1); never returns 0.
    double next_unit_open();

    /// Standard exponential deviate, strictly positive.
    double next_exponential();

    /// Uniform integer in [lo, hi] inclusive.
    int next_int(int lo, int hi);

private:
    std::uint64_t counter_;
};

}  // namespace wf
