#pragma once

#include <cstdint>

#include "conn2k/graph.hpp"

namespace conn2k {

/// splitmix64: the fixed generator behind `conn2k gen`, chosen so instances
/// reproduce bit-for-bit from a seed across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound) by modulo reduction.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Deterministic pseudo-random simple graph: for every pair (u, v) with
/// u < v in lexicographic order, one draw decides inclusion against
/// edge_probability and, if included, a second draw picks the capacity in
/// [1, max_cap]. Same seed, same graph.
CapGraph random_instance(int n, double edge_probability, Capacity max_cap, std::uint64_t seed);

} // namespace conn2k
