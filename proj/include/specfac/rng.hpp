#pragma once

#include <cstdint>

#include "specfac/graph.hpp"

namespace specfac {

/// SplitMix64: state advances by the 64-bit golden gamma, outputs go
/// through the Stafford mix13 finalizer. Bit-exact across platforms
/// and languages; campaign reports depend on that.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Trial k of a campaign with seed s draws from SplitMix64(mix(s + 1 + k)),
/// so shards can be recomputed independently in any order.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(SplitMix64::mix(seed + 1 + trial));
}

/// G(n, p): one next_unit() per pair, pairs in row order
/// (0,1),(0,2),...,(0,n-1),(1,2),... — part of the report contract.
Graph random_graph(int n, double p, SplitMix64& rng);

/// Rejection-sampled connected G(n, p).
Graph random_connected_graph(int n, double p, SplitMix64& rng);

}  // namespace specfac
