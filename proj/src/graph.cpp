#include "conn2k/graph.hpp"

#include <algorithm>

namespace conn2k {

void CapGraph::add_capacity(VertexId u, VertexId v, Capacity amount) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("loops are not allowed");
    if (amount < 0) throw InvalidArgument("negative capacity amount");
    if (amount == 0) return;
    auto [it, inserted] = adj_[u].try_emplace(v, 0);
    it->second += amount;
    adj_[v][u] = it->second;
    if (inserted) ++edge_count_;
}

void CapGraph::sub_capacity(VertexId u, VertexId v, Capacity amount) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("loops are not allowed");
    if (amount < 0) throw InvalidArgument("negative capacity amount");
    if (amount == 0) return;
    auto it = adj_[u].find(v);
    Capacity cur = it == adj_[u].end() ? 0 : it->second;
    if (cur < amount) throw InvalidArgument("capacity would drop below zero");
    if (cur == amount) {
        adj_[u].erase(it);
        adj_[v].erase(u);
        --edge_count_;
    } else {
        it->second -= amount;
        adj_[v][u] = it->second;
    }
}

Capacity CapGraph::cut_capacity(const VertexSet& s) const {
    if (s.ground_size() != vertex_count()) throw InvalidArgument("set ground size mismatch");
    Capacity total = 0;
    for (int u = 0; u < vertex_count(); ++u) {
        if (!s.contains(u)) continue;
        for (auto& [v, c] : adj_[u])
            if (!s.contains(v)) total += c;
    }
    return total;
}

Capacity CapGraph::delta_between(const VertexSet& x, const VertexSet& y) const {
    if (x.ground_size() != vertex_count() || y.ground_size() != vertex_count())
        throw InvalidArgument("set ground size mismatch");
    Capacity total = 0;
    for (int u = 0; u < vertex_count(); ++u) {
        if (!x.contains(u) || y.contains(u)) continue; // u in X-Y
        for (auto& [v, c] : adj_[u])
            if (y.contains(v) && !x.contains(v)) total += c; // v in Y-X
    }
    return total;
}

Capacity CapGraph::delta_bar(const VertexSet& x, const VertexSet& y) const {
    return delta_between(x & y, (x | y).complement());
}

CapGraph::Removal CapGraph::remove_vertex(VertexId x) const {
    check_vertex(x);
    if (vertex_count() < 2) throw InvalidArgument("removal would leave an empty graph");
    Removal r;
    r.new_of_old.assign(vertex_count(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
        if (v == x) continue;
        r.new_of_old[v] = static_cast<int>(r.old_of_new.size());
        r.old_of_new.push_back(v);
    }
    r.graph = CapGraph(vertex_count() - 1);
    for (int u = 0; u < vertex_count(); ++u) {
        if (u == x) continue;
        for (auto& [v, c] : adj_[u])
            if (v != x && u < v) r.graph.add_capacity(r.new_of_old[u], r.new_of_old[v], c);
    }
    return r;
}

std::vector<std::tuple<VertexId, VertexId, Capacity>> CapGraph::edges() const {
    std::vector<std::tuple<VertexId, VertexId, Capacity>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (auto& [v, c] : adj_[u])
            if (u < v) out.emplace_back(u, v, c);
    return out;
}

StarGraph StarGraph::attach(const CapGraph& g) {
    CapGraph h(g.vertex_count() + 1);
    for (auto& [u, v, c] : g.edges()) h.add_capacity(u, v, c);
    return StarGraph(std::move(h));
}

} // namespace conn2k
