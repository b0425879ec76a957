#include "conn2k/extension.hpp"

#include <algorithm>
#include <numeric>

namespace conn2k {

Extension minimal_even_extension(const CapGraph& g, int k, std::optional<std::vector<VertexId>> order,
                                 RunStats* stats) {
    int n = g.vertex_count();
    if (n < 3) throw InvalidArgument("minimal_even_extension: |V| >= 3 required");
    if (k < 2) throw InvalidArgument("minimal_even_extension: k >= 2 required");

    std::vector<VertexId> ord;
    if (order) {
        ord = *order;
        std::vector<VertexId> sorted = ord;
        std::sort(sorted.begin(), sorted.end());
        std::vector<VertexId> expected(n);
        std::iota(expected.begin(), expected.end(), 0);
        if (sorted != expected)
            throw InvalidArgument("minimal_even_extension: order must be a permutation of V");
    } else {
        ord.resize(n);
        std::iota(ord.begin(), ord.end(), 0);
    }

    // Initial capacity 2k per s-edge already makes every nontrivial biset
    // satisfy f >= 2k.
    StarGraph h = StarGraph::attach(g);
    for (int v = 0; v < n; ++v) h.graph.add_capacity(h.s(), v, 2 * Capacity(k));

    for (VertexId v : ord) {
        if (h.graph.capacity(h.s(), v) == 0) continue;
        h = max_reduce_2k(h, k, v, stats).graph;
    }

    Extension ext;
    ext.order = std::move(ord);
    if (h.s_degree() % 2 != 0) {
        VertexId fix = -1;
        for (auto it = ext.order.rbegin(); it != ext.order.rend(); ++it)
            if (h.graph.capacity(h.s(), *it) % 2 != 0) {
                fix = *it;
                break;
            }
        if (fix < 0) throw InternalError("minimal_even_extension: odd s-degree without an odd edge");
        h.graph.add_capacity(h.s(), fix, 1);
        ext.parity_fixed_at = fix;
    }
    ext.star = std::move(h);
    return ext;
}

} // namespace conn2k
