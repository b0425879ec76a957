#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "conn2k/errors.hpp"

namespace conn2k {

/// Edge capacities are strictly positive integers; a capacity of 0 means the
/// edge is absent. Inputs are restricted to <= 2^32 per edge so every cut sum
/// fits comfortably in 64 bits.
using Capacity = long long;

/// Dense vertex indices in [0, n). In a StarGraph the designated vertex s is
/// always the highest index.
using VertexId = int;

/// Subset of a fixed ground set [0, n), stored as a bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int ground_size)
        : n_(ground_size), words_((ground_size + 63) / 64, 0) {}

    static VertexSet full(int ground_size) {
        VertexSet s(ground_size);
        for (int v = 0; v < ground_size; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int ground_size, std::initializer_list<int> members) {
        VertexSet s(ground_size);
        for (int v : members) s.add(v);
        return s;
    }

    int ground_size() const { return n_; }

    void add(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void remove(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool contains(int v) const {
        return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_full() const { return count() == n_; }

    /// Smallest member, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_ground(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet operator|(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }
    VertexSet complement() const {
        VertexSet r(n_);
        for (int v = 0; v < n_; ++v)
            if (!contains(v)) r.add(v);
        return r;
    }

    bool operator==(const VertexSet& o) const = default;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw InvalidArgument("vertex index out of ground set");
    }
    void check_ground(const VertexSet& o) const {
        if (n_ != o.n_) throw InvalidArgument("ground-set size mismatch");
    }
    template <class F>
    VertexSet apply(const VertexSet& o, F f) const {
        check_ground(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        return r;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected, loopless graph with strictly positive integer edge capacities.
/// Pure value semantics: copies are independent, all queries are const.
class CapGraph {
public:
    CapGraph() = default;
    explicit CapGraph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// 0 when the edge is absent.
    Capacity capacity(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        auto it = adj_[u].find(v);
        return it == adj_[u].end() ? 0 : it->second;
    }

    /// Sorted neighbor map of v with the current capacities.
    const std::map<VertexId, Capacity>& neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }

    /// Total capacity incident to v, i.e. c(delta({v})).
    Capacity degree(VertexId v) const {
        check_vertex(v);
        Capacity d = 0;
        for (auto& [w, c] : adj_[v]) d += c;
        return d;
    }

    void add_capacity(VertexId u, VertexId v, Capacity amount);
    void sub_capacity(VertexId u, VertexId v, Capacity amount);

    /// c(delta(S)): total capacity of edges with exactly one end in S.
    Capacity cut_capacity(const VertexSet& s) const;

    /// c(delta(X, Y)): total capacity of edges between X-Y and Y-X.
    Capacity delta_between(const VertexSet& x, const VertexSet& y) const;

    /// Total capacity of edges between X∩Y and the complement of X∪Y.
    Capacity delta_bar(const VertexSet& x, const VertexSet& y) const;

    struct Removal;

    /// Graph with x and its edges removed. Remaining vertices are compacted
    /// preserving order (new index = old index, minus one above x); the
    /// translation tables let callers map sets back to original labels.
    Removal remove_vertex(VertexId x) const;

    /// Edges as (u, v, cap) with u < v, lexicographically sorted.
    std::vector<std::tuple<VertexId, VertexId, Capacity>> edges() const;

    bool operator==(const CapGraph& o) const = default;

private:
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= vertex_count()) throw InvalidArgument("vertex index out of range");
    }

    std::vector<std::map<VertexId, Capacity>> adj_;
    int edge_count_ = 0;
};

struct CapGraph::Removal {
    CapGraph graph;
    std::vector<VertexId> old_of_new; ///< old_of_new[i] = original label of new vertex i
    std::vector<VertexId> new_of_old; ///< -1 for the removed vertex
};

/// A CapGraph over V plus one designated external vertex s, stored at the
/// highest index. |V| = vertex_count() - 1.
struct StarGraph {
    CapGraph graph;

    StarGraph() = default;
    explicit StarGraph(CapGraph g) : graph(std::move(g)) {
        if (graph.vertex_count() < 2) throw InvalidArgument("star graph needs s and at least one vertex");
    }

    /// Wraps g with a fresh isolated vertex s.
    static StarGraph attach(const CapGraph& g);

    VertexId s() const { return graph.vertex_count() - 1; }
    int inner_count() const { return graph.vertex_count() - 1; }

    std::vector<VertexId> s_neighbors() const {
        std::vector<VertexId> out;
        for (auto& [v, c] : graph.neighbors(s())) out.push_back(v);
        return out;
    }
    Capacity s_degree() const { return graph.degree(s()); }

    /// Removes an inner vertex x. s keeps the highest index because the
    /// compaction preserves order.
    CapGraph::Removal remove_inner(VertexId x) const {
        if (x < 0 || x >= inner_count()) throw InvalidArgument("not an inner vertex");
        return graph.remove_vertex(x);
    }

    bool operator==(const StarGraph& o) const = default;
};

} // namespace conn2k
