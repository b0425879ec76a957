#include "conn2k/mincut.hpp"

#include <limits>

namespace conn2k {

namespace {

constexpr Capacity kInf = std::numeric_limits<Capacity>::max();

// Contraction state shared by the two public entry points. Supernode i holds
// members[i] (original vertex labels restricted to the reportable ground set)
// and rep[i], the smallest original index it absorbed, used for tie-breaking.
struct Engine {
    std::vector<std::vector<Capacity>> w;
    std::vector<char> active;
    std::vector<VertexSet> members;
    std::vector<int> rep;
    int active_count = 0;

    explicit Engine(const CapGraph& g, int reportable) {
        int n = g.vertex_count();
        w.assign(n, std::vector<Capacity>(n, 0));
        for (auto& [u, v, c] : g.edges()) w[u][v] = w[v][u] = c;
        active.assign(n, 1);
        members.reserve(n);
        rep.resize(n);
        for (int i = 0; i < n; ++i) {
            members.emplace_back(reportable);
            if (i < reportable) members[i].add(i);
            rep[i] = i;
        }
        active_count = n;
    }

    struct Phase {
        int last, second_last;
        Capacity last_attach;
    };

    // One MA-ordering phase starting at `start`; does not contract.
    Phase run_phase(int start) const {
        int n = static_cast<int>(w.size());
        std::vector<char> in_order(n, 0);
        std::vector<Capacity> attach(n, 0);
        in_order[start] = 1;
        for (int j = 0; j < n; ++j)
            if (active[j] && !in_order[j]) attach[j] = w[start][j];
        int prev = start, last = start;
        for (int step = 1; step < active_count; ++step) {
            int pick = -1;
            for (int j = 0; j < n; ++j) {
                if (!active[j] || in_order[j]) continue;
                if (pick == -1 || attach[j] > attach[pick] ||
                    (attach[j] == attach[pick] && rep[j] < rep[pick]))
                    pick = j;
            }
            in_order[pick] = 1;
            prev = last;
            last = pick;
            for (int j = 0; j < n; ++j)
                if (active[j] && !in_order[j]) attach[j] += w[pick][j];
        }
        return {last, prev, attach[last]};
    }

    void contract(int into, int from) {
        int n = static_cast<int>(w.size());
        for (int j = 0; j < n; ++j) {
            if (!active[j] || j == into || j == from) continue;
            w[into][j] += w[from][j];
            w[j][into] = w[into][j];
        }
        w[into][from] = w[from][into] = 0;
        active[from] = 0;
        members[into] = members[into] | members[from];
        rep[into] = std::min(rep[into], rep[from]);
        --active_count;
    }
};

} // namespace

MaOrdering ma_order(const CapGraph& g, VertexId start) {
    int n = g.vertex_count();
    if (start < 0 || start >= n) throw InvalidArgument("ma_order: start vertex out of range");
    MaOrdering out;
    std::vector<char> in_order(n, 0);
    std::vector<Capacity> attach(n, 0);
    out.order.push_back(start);
    in_order[start] = 1;
    for (auto& [j, c] : g.neighbors(start)) attach[j] = c;
    for (int step = 1; step < n; ++step) {
        int pick = -1;
        for (int j = 0; j < n; ++j)
            if (!in_order[j] && (pick == -1 || attach[j] > attach[pick])) pick = j;
        out.order.push_back(pick);
        in_order[pick] = 1;
        out.last_cut_value = attach[pick];
        for (auto& [j, c] : g.neighbors(pick))
            if (!in_order[j]) attach[j] += c;
    }
    if (n == 1) out.last_cut_value = 0;
    return out;
}

CutResult restricted_min_cut(const StarGraph& h) {
    int nv = h.inner_count();
    if (nv < 2) throw InvalidArgument("restricted_min_cut: |V| >= 2 required");
    Engine eng(h.graph, nv);
    int s_node = h.s();
    eng.rep[s_node] = nv; // s never wins a tie against an inner supernode

    CutResult best{kInf, VertexSet(nv)};
    while (eng.active_count >= 2 && best.value > 0) {
        auto phase = eng.run_phase(s_node);
        if (phase.last == s_node) throw InternalError("restricted_min_cut: s ordered last");
        // The last supernode never contains s; its member set is a candidate
        // side unless it already swallowed all of V.
        if (eng.members[phase.last].count() < nv && phase.last_attach < best.value) {
            best.value = phase.last_attach;
            best.side = eng.members[phase.last];
        }
        eng.contract(phase.second_last, phase.last);
    }
    if (best.value == kInf) throw InternalError("restricted_min_cut: no candidate cut found");
    return best;
}

CutResult global_min_cut(const CapGraph& g) {
    int n = g.vertex_count();
    if (n < 2) throw InvalidArgument("global_min_cut: n >= 2 required");
    Engine eng(g, n);
    CutResult best{kInf, VertexSet(n)};
    int start = 0;
    while (eng.active_count >= 2 && best.value > 0) {
        auto phase = eng.run_phase(start);
        if (phase.last_attach < best.value) {
            best.value = phase.last_attach;
            best.side = eng.members[phase.last];
        }
        eng.contract(phase.second_last, phase.last);
        if (!eng.active[start]) start = phase.second_last;
    }
    return best;
}

} // namespace conn2k
