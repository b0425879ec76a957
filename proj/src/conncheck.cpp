#include "conn2k/conncheck.hpp"

#include "conn2k/splitoff.hpp"

namespace conn2k {

namespace {

Biset lift_cut_to_biset(const VertexSet& side, int ground) {
    VertexSet inner(ground);
    for (int v : side.members()) inner.add(v);
    return Biset(inner, inner);
}

} // namespace

ConnVerdict is_kec_in_v(const StarGraph& h, Capacity k) {
    CutResult cut = restricted_min_cut(h);
    ConnVerdict verdict;
    if (cut.value < k) {
        verdict.ok = false;
        verdict.cut_witness = std::move(cut);
    }
    return verdict;
}

ConnVerdict is_2k_conn_in_v(const StarGraph& h, int k) {
    if (h.inner_count() < 3) throw InvalidArgument("is_2k_conn_in_v: |V| >= 3 required");
    if (k < 2) throw InvalidArgument("is_2k_conn_in_v: k >= 2 required");
    int nv = h.inner_count();

    CutResult cut = restricted_min_cut(h);
    if (cut.value < 2 * Capacity(k)) {
        ConnVerdict verdict;
        verdict.ok = false;
        verdict.biset_witness = lift_cut_to_biset(cut.side, nv);
        verdict.cut_witness = std::move(cut);
        return verdict;
    }
    for (int x = 0; x < nv; ++x) {
        auto removal = h.remove_inner(x);
        StarGraph hx(std::move(removal.graph));
        CutResult sub = restricted_min_cut(hx);
        if (sub.value < k) {
            // Lift the offending cut of H - x to the biset ((S ∪ {x}), S).
            VertexSet inner(nv);
            for (int v : sub.side.members()) inner.add(removal.old_of_new[v]);
            VertexSet outer = inner;
            outer.add(x);
            ConnVerdict verdict;
            verdict.ok = false;
            verdict.biset_witness = Biset(outer, inner);
            return verdict;
        }
    }
    return {};
}

bool is_pair_admissible(const StarGraph& h, int k, VertexId u, VertexId v) {
    if (h.graph.capacity(h.s(), u) == 0 || h.graph.capacity(h.s(), v) == 0)
        throw InvalidArgument("is_pair_admissible: endpoints must be neighbors of s");
    if (u == v && h.graph.capacity(h.s(), u) < 2)
        throw InvalidArgument("is_pair_admissible: u = v requires c(su) >= 2");
    return is_2k_conn_in_v(split(h, u, v, 1), k).ok;
}

VertexSet u_set(const StarGraph& h, int k) {
    if (!is_2k_conn_in_v(h, k).ok)
        throw InvalidArgument("u_set: graph is not (2,k)-connected in V");
    VertexSet out(h.inner_count());
    for (VertexId v : h.s_neighbors())
        if (is_2k_conn_in_v(reduce(h, v, 1), k).ok) out.add(v);
    return out;
}

} // namespace conn2k
