#include "conn2k/biset.hpp"

namespace conn2k {

namespace {

void check_ground(const StarGraph& h, const Biset& x) {
    if (x.ground_size() != h.inner_count())
        throw InvalidArgument("biset ground set does not match the star graph's V");
}

bool blocks_with_f(Capacity f, int k, const Biset& x, VertexId u, VertexId v) {
    if (x.is_trivial()) return false;
    if (f <= 2 * k + 1 && x.inner.contains(u) && x.inner.contains(v)) return true;
    return f == 2 * k && x.outer.contains(u) && x.outer.contains(v) &&
           (x.inner.contains(u) || x.inner.contains(v));
}

} // namespace

Capacity f_value(const StarGraph& h, int k, const Biset& x) {
    check_ground(h, x);
    if (k < 2) throw InvalidArgument("f_value: k >= 2 required");
    Capacity cut = 0;
    for (int u = 0; u < x.ground_size(); ++u) {
        if (!x.inner.contains(u)) continue;
        for (auto& [w, c] : h.graph.neighbors(u))
            if (w == h.s() || !x.outer.contains(w)) cut += c;
    }
    return Capacity(k) * x.wall().count() + cut;
}

bool blocks(const StarGraph& h, int k, const Biset& x, VertexId u, VertexId v) {
    check_ground(h, x);
    if (h.graph.capacity(h.s(), u) == 0 || h.graph.capacity(h.s(), v) == 0)
        throw InvalidArgument("blocks: endpoints must be neighbors of s");
    return blocks_with_f(f_value(h, k, x), k, x, u, v);
}

bool is_horrifying(const StarGraph& h, int k, const Biset& x) {
    check_ground(h, x);
    Capacity f = f_value(h, k, x);
    auto nbrs = h.s_neighbors();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (blocks_with_f(f, k, x, nbrs[i], nbrs[j])) return true;
    return false;
}

} // namespace conn2k
