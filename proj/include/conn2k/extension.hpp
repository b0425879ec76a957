#pragma once

#include <optional>
#include <vector>

#include "conn2k/splitoff.hpp"

namespace conn2k {

struct Extension {
    StarGraph star;
    std::vector<VertexId> order;
    std::optional<VertexId> parity_fixed_at;
};

/// Minimal even extension for (2,k)-connectivity: attach s with capacity 2k
/// to every vertex, greedily reduce each s-edge as far as (2,k)-connectivity
/// in V allows (in the given order, default ascending index), then restore
/// even total s-capacity by bumping the latest odd edge in the order.
/// The result is (2,k)-connected in V with even s-degree.
/// Requires |V| >= 3 and k >= 2.
Extension minimal_even_extension(const CapGraph& g, int k,
                                 std::optional<std::vector<VertexId>> order = std::nullopt,
                                 RunStats* stats = nullptr);

} // namespace conn2k
