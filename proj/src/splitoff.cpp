#include "conn2k/splitoff.hpp"

#include <algorithm>

namespace conn2k {

namespace {

void require_neighbor(const StarGraph& h, VertexId v, const char* what) {
    if (v < 0 || v >= h.inner_count()) throw InvalidArgument(std::string(what) + ": not an inner vertex");
    if (h.graph.capacity(h.s(), v) == 0)
        throw InvalidArgument(std::string(what) + ": vertex is not a neighbor of s");
}

VertexSet translate_up(const VertexSet& sub, const std::vector<VertexId>& old_of_new, int ground) {
    VertexSet out(ground);
    for (int v : sub.members()) out.add(old_of_new[v]);
    return out;
}

// Lifts a subset of V into the V+s ground set of the star graph.
VertexSet with_s_ground(const VertexSet& side, const StarGraph& h) {
    VertexSet out(h.graph.vertex_count());
    for (int v : side.members()) out.add(v);
    return out;
}

} // namespace

StarGraph reduce(const StarGraph& h, VertexId v, Capacity alpha) {
    if (alpha < 0) throw InvalidArgument("reduce: negative alpha");
    if (alpha == 0) return h;
    require_neighbor(h, v, "reduce");
    if (alpha > h.graph.capacity(h.s(), v)) throw InvalidArgument("reduce: alpha exceeds c(sv)");
    StarGraph out = h;
    out.graph.sub_capacity(h.s(), v, alpha);
    return out;
}

StarGraph split(const StarGraph& h, VertexId u, VertexId v, Capacity alpha) {
    if (alpha < 0) throw InvalidArgument("split: negative alpha");
    if (alpha == 0) return h;
    require_neighbor(h, u, "split");
    require_neighbor(h, v, "split");
    StarGraph out = h;
    if (u == v) {
        if (2 * alpha > h.graph.capacity(h.s(), u))
            throw InvalidArgument("split: 2*alpha exceeds c(su) for u = v");
        out.graph.sub_capacity(h.s(), u, 2 * alpha); // the uu loop is discarded
        return out;
    }
    if (alpha > std::min(h.graph.capacity(h.s(), u), h.graph.capacity(h.s(), v)))
        throw InvalidArgument("split: alpha exceeds min(c(su), c(sv))");
    out.graph.sub_capacity(h.s(), u, alpha);
    out.graph.sub_capacity(h.s(), v, alpha);
    out.graph.add_capacity(u, v, alpha);
    return out;
}

MaxKecResult max_reduce_kec(const StarGraph& h, Capacity k, VertexId v, RunStats* stats) {
    require_neighbor(h, v, "max_reduce_kec");
    Capacity gamma = h.graph.capacity(h.s(), v);
    StarGraph h_gamma = reduce(h, v, gamma);
    CutResult lambda = restricted_min_cut(h_gamma);
    if (stats) ++stats->mincut_calls;
    Capacity alpha = std::min(gamma, gamma - k + lambda.value);
    if (alpha < 0) throw InternalError("max_reduce_kec: input not k-edge-connected in V");
    MaxKecResult out;
    out.alpha = alpha;
    out.graph = reduce(h, v, alpha);
    if (alpha < gamma) {
        // Every minimizer of lambda(H_gamma) contains v here, so the returned
        // side is a valid tight set.
        if (!lambda.side.contains(v)) throw InternalError("max_reduce_kec: witness misses v");
        if (out.graph.graph.cut_capacity(with_s_ground(lambda.side, h)) != k)
            throw InternalError("max_reduce_kec: witness cut is not exactly k");
        out.witness = lambda.side;
    }
    return out;
}

MaxKecResult max_split_kec(const StarGraph& h, Capacity k, VertexId u, VertexId v, RunStats* stats) {
    if (u == v) throw InvalidArgument("max_split_kec: u != v required");
    require_neighbor(h, u, "max_split_kec");
    require_neighbor(h, v, "max_split_kec");
    Capacity gamma = std::min(h.graph.capacity(h.s(), u), h.graph.capacity(h.s(), v));
    StarGraph h_gamma = split(h, u, v, gamma);
    CutResult lambda = restricted_min_cut(h_gamma);
    if (stats) ++stats->mincut_calls;
    Capacity num = 2 * gamma + lambda.value - k; // alpha = floor(num / 2)
    if (num < 0) throw InternalError("max_split_kec: input not k-edge-connected in V");
    Capacity alpha = std::min(gamma, num / 2);
    MaxKecResult out;
    out.alpha = alpha;
    out.graph = split(h, u, v, alpha);
    if (alpha < gamma) {
        if (!lambda.side.contains(u) || !lambda.side.contains(v))
            throw InternalError("max_split_kec: witness misses u or v");
        if (out.graph.graph.cut_capacity(with_s_ground(lambda.side, h)) > k + 1)
            throw InternalError("max_split_kec: witness cut exceeds k+1");
        out.witness = lambda.side;
    }
    return out;
}

MaxReduce2kResult max_reduce_2k(const StarGraph& h, int k, VertexId v, RunStats* stats) {
    if (h.inner_count() < 3) throw InvalidArgument("max_reduce_2k: |V| >= 3 required");
    require_neighbor(h, v, "max_reduce_2k");
    Capacity alpha = max_reduce_kec(h, 2 * Capacity(k), v, stats).alpha;
    for (int x = 0; x < h.inner_count(); ++x) {
        if (x == v) continue;
        auto removal = h.remove_inner(x);
        StarGraph hx(std::move(removal.graph));
        alpha = std::min(alpha, max_reduce_kec(hx, k, removal.new_of_old[v], stats).alpha);
    }
    return {alpha, reduce(h, v, alpha)};
}

SplitOutcome max_split_2k(const StarGraph& h, int k, VertexId u, VertexId v, RunStats* stats) {
    if (u == v) throw InvalidArgument("max_split_2k: u != v required");
    if (h.inner_count() < 3) throw InvalidArgument("max_split_2k: |V| >= 3 required");
    require_neighbor(h, u, "max_split_2k");
    require_neighbor(h, v, "max_split_2k");
    int nv = h.inner_count();

    // Candidate constraints in binding order: threshold-2k on H, then
    // threshold-k on H - x for x ascending, then the deleted-endpoint cases.
    struct Candidate {
        Capacity alpha;
        std::optional<VertexSet> witness; // in the subgraph's index space
        std::vector<VertexId> old_of_new; // empty for the full-graph case
        VertexId extra;                   // wall vertex of the blocker, -1 for none
    };
    std::vector<Candidate> cands;

    auto whole = max_split_kec(h, 2 * Capacity(k), u, v, stats);
    cands.push_back({whole.alpha, std::move(whole.witness), {}, -1});

    for (int x = 0; x < nv; ++x) {
        if (x == u || x == v) continue;
        auto removal = h.remove_inner(x);
        StarGraph hx(std::move(removal.graph));
        auto r = max_split_kec(hx, k, removal.new_of_old[u], removal.new_of_old[v], stats);
        cands.push_back({r.alpha, std::move(r.witness), std::move(removal.old_of_new), x});
    }
    {
        auto removal = h.remove_inner(u);
        StarGraph hu(std::move(removal.graph));
        auto r = max_reduce_kec(hu, k, removal.new_of_old[v], stats);
        cands.push_back({r.alpha, std::move(r.witness), std::move(removal.old_of_new), u});
    }
    {
        auto removal = h.remove_inner(v);
        StarGraph hv(std::move(removal.graph));
        auto r = max_reduce_kec(hv, k, removal.new_of_old[u], stats);
        cands.push_back({r.alpha, std::move(r.witness), std::move(removal.old_of_new), v});
    }

    Capacity alpha = cands[0].alpha;
    for (auto& c : cands) alpha = std::min(alpha, c.alpha);

    SplitOutcome out;
    out.alpha = alpha;
    out.graph = split(h, u, v, alpha);

    bool residual = out.graph.graph.capacity(h.s(), u) > 0 && out.graph.graph.capacity(h.s(), v) > 0;
    if (residual) {
        auto binding = std::find_if(cands.begin(), cands.end(),
                                    [&](const Candidate& c) { return c.alpha == alpha; });
        if (!binding->witness)
            throw InternalError("max_split_2k: binding constraint carries no witness");
        VertexSet inner = binding->old_of_new.empty()
                              ? *binding->witness
                              : translate_up(*binding->witness, binding->old_of_new, nv);
        VertexSet outer = inner;
        if (binding->extra >= 0) outer.add(binding->extra);
        Biset blocker(outer, inner);
        if (blocker.wall().count() > 1 || !blocks(out.graph, k, blocker, u, v))
            throw InternalError("max_split_2k: constructed biset does not block the pair");
        out.blocker = std::move(blocker);
    }
    return out;
}

} // namespace conn2k
