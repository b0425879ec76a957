#pragma once

#include "conn2k/augment.hpp"
#include "conn2k/conncheck.hpp"
#include "conn2k/extension.hpp"
#include "conn2k/gen.hpp"
#include "conn2k/oracle.hpp"

namespace conn2k::testutil {

// Path a-b-c with unit capacities (vertices 0,1,2).
inline CapGraph path3() {
    CapGraph g(3);
    g.add_capacity(0, 1, 1);
    g.add_capacity(1, 2, 1);
    return g;
}

// K4 minus heavy triangle: ab=ac=ad=1, bc=bd=cd=2 (a=0).
inline CapGraph g2() {
    CapGraph g(4);
    g.add_capacity(0, 1, 1);
    g.add_capacity(0, 2, 1);
    g.add_capacity(0, 3, 1);
    g.add_capacity(1, 2, 2);
    g.add_capacity(1, 3, 2);
    g.add_capacity(2, 3, 2);
    return g;
}

// Triangle with all capacities 2; already (2,2)-connected.
inline CapGraph triangle2() {
    CapGraph g(3);
    g.add_capacity(0, 1, 2);
    g.add_capacity(0, 2, 2);
    g.add_capacity(1, 2, 2);
    return g;
}

// Extension of path3 at k=2: s-capacities (3,2,3).
inline StarGraph p3_extension() { return minimal_even_extension(path3(), 2).star; }

inline VertexSet vs(int n, std::initializer_list<int> members) { return VertexSet::of(n, members); }

// Random star graph: each V-pair and each s-edge drawn independently.
inline StarGraph random_star(SplitMix64& rng, int nv, Capacity max_cap, double p_inner = 0.7,
                             double p_star = 0.7) {
    CapGraph h(nv + 1);
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (rng.next_unit() < p_inner)
                h.add_capacity(u, v, 1 + static_cast<Capacity>(rng.next_below(max_cap)));
    for (int v = 0; v < nv; ++v)
        if (rng.next_unit() < p_star)
            h.add_capacity(nv, v, 1 + static_cast<Capacity>(rng.next_below(max_cap)));
    return StarGraph(std::move(h));
}

// f evaluated for a biset over the ground set V+s, by direct edge
// enumeration. Used to test the complement identity with s included.
inline Capacity f_over_star_ground(const StarGraph& h, int k, const VertexSet& outer,
                                   const VertexSet& inner) {
    Capacity cut = 0;
    int total = h.graph.vertex_count();
    for (int u = 0; u < total; ++u) {
        if (!inner.contains(u)) continue;
        for (auto& [w, c] : h.graph.neighbors(u))
            if (!outer.contains(w)) cut += c;
    }
    return Capacity(k) * ((outer - inner).count()) + cut;
}

} // namespace conn2k::testutil
