#include "conn2k/gen.hpp"

namespace conn2k {

CapGraph random_instance(int n, double edge_probability, Capacity max_cap, std::uint64_t seed) {
    if (n < 3) throw InvalidArgument("random_instance: n >= 3 required");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InvalidArgument("random_instance: p in [0, 1] required");
    if (max_cap < 1) throw InvalidArgument("random_instance: max_cap >= 1 required");
    SplitMix64 rng(seed);
    CapGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < edge_probability)
                g.add_capacity(u, v, 1 + static_cast<Capacity>(rng.next_below(
                                             static_cast<std::uint64_t>(max_cap))));
    return g;
}

} // namespace conn2k
