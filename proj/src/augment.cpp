#include "conn2k/augment.hpp"

#include <algorithm>
#include <map>

#include "conn2k/conncheck.hpp"
#include "conn2k/oracle.hpp"

namespace conn2k {

namespace {

constexpr int kObstacleOracleBound = 6;

VertexSet neighbor_set(const StarGraph& h) {
    VertexSet out(h.inner_count());
    for (VertexId v : h.s_neighbors()) out.add(v);
    return out;
}

void check_state(const StarGraph& h, int k, const Biset& x, AssertLevel level) {
    if (level == AssertLevel::off) return;
    if (h.s_degree() % 2 != 0) throw InternalError("splitting: s-degree became odd");
    if (f_value(h, k, x) > 2 * Capacity(k) + 1)
        throw InternalError("splitting: stored biset exceeds the f bound");
    if (x.wall().count() > 1) throw InternalError("splitting: stored biset wall too large");
    if (x.outer.is_full()) throw InternalError("splitting: stored biset outer set covers V");
    if (level == AssertLevel::full) {
        if (!is_2k_conn_in_v(h, k).ok)
            throw InternalError("splitting: intermediate graph lost (2,k)-connectivity in V");
        if (h.inner_count() <= kObstacleOracleBound) {
            if (!oracle::bf_is_2k_conn(h, k).ok)
                throw InternalError("splitting: biset oracle rejects intermediate graph");
            if (oracle::find_obstacle(h, k))
                throw InternalError("splitting: an obstacle appeared during splitting");
        }
    }
}

struct AddedEdges {
    std::map<std::pair<VertexId, VertexId>, Capacity> by_pair;

    void record(VertexId u, VertexId v, Capacity alpha) {
        if (alpha <= 0) return;
        auto key = std::minmax(u, v);
        by_pair[{key.first, key.second}] += alpha;
    }

    void finish(AugmentationResult& result) const {
        for (auto& [pair, cap] : by_pair) {
            result.added.emplace_back(pair.first, pair.second, cap);
            result.total += cap;
        }
    }
};

} // namespace

AugmentationResult naive_complete_split(const Extension& ext, int k, AssertLevel level) {
    StarGraph h = ext.star;
    AugmentationResult result;
    AddedEdges added;
    auto nbrs = h.s_neighbors(); // ascending

    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            VertexId u = nbrs[i], v = nbrs[j];
            // One maximal-splitting computation per pair of the original
            // neighbor list; when an endpoint's capacity is exhausted the
            // maximal multiplicity is 0 without any min-cut work, but the
            // attempt still counts toward the pair-loop total.
            ++result.stats.maximal_splits;
            ++result.stats.iterations;
            if (h.graph.capacity(h.s(), u) == 0 || h.graph.capacity(h.s(), v) == 0) continue;
            auto outcome = max_split_2k(h, k, u, v, &result.stats);
            added.record(u, v, outcome.alpha);
            h = std::move(outcome.graph);
            check_state(h, k, Biset::empty(h.inner_count()), level);
        }
    }
    if (h.s_degree() != 0)
        throw InternalError("naive_complete_split: s not isolated after the pass");
    added.finish(result);
    return result;
}

AugmentationResult fast_complete_split(const Extension& ext, int k, AssertLevel level) {
    StarGraph h = ext.star;
    int n = h.inner_count();
    long long budget = 4LL * n + 2;

    AugmentationResult result;
    AddedEdges added;
    Biset x = Biset::empty(n);

    auto progress = [&]() {
        VertexSet nbrs = neighbor_set(h);
        return Capacity(nbrs.count()) + (nbrs - x.outer).count();
    };
    Capacity m_prev2 = -1, m_prev = progress();

    while (neighbor_set(h).count() >= 2) {
        ++result.stats.iterations;
        if (result.stats.iterations > budget)
            throw InternalError("fast_complete_split: iteration budget 4n+2 exceeded");

        if (!is_horrifying(h, k, x)) {
            VertexSet nbrs = neighbor_set(h);
            VertexId u = nbrs.first();
            nbrs.remove(u);
            VertexId v = nbrs.first();
            auto outcome = max_split_2k(h, k, u, v, &result.stats);
            ++result.stats.maximal_splits;
            added.record(u, v, outcome.alpha);
            h = std::move(outcome.graph);
            if (outcome.blocker) x = *std::move(outcome.blocker);
        } else {
            VertexSet nbrs = neighbor_set(h);
            VertexId u = (x.inner & nbrs).first();
            VertexId v = (nbrs - x.outer).first();
            if (u < 0) throw InternalError("fast_complete_split: horrifying biset without inner neighbor");
            if (v < 0) throw InternalError("fast_complete_split: no neighbor of s outside the outer set");
            auto outcome = max_split_2k(h, k, u, v, &result.stats);
            ++result.stats.maximal_splits;
            added.record(u, v, outcome.alpha);
            h = std::move(outcome.graph);
            if (outcome.blocker) {
                Biset y = *std::move(outcome.blocker);
                Biset xy = biset_union(x, y);
                if (is_horrifying(h, k, xy)) {
                    x = std::move(xy);
                } else if ((x.inner & neighbor_set(h) & y.inner.complement()).empty()) {
                    x = std::move(y);
                } else {
                    VertexId z = ((x.inner - y.inner) & neighbor_set(h)).first();
                    auto second = max_split_2k(h, k, v, z, &result.stats);
                    ++result.stats.maximal_splits;
                    added.record(v, z, second.alpha);
                    h = std::move(second.graph);
                    if (second.blocker) x = biset_union(xy, *second.blocker);
                }
            }
        }

        check_state(h, k, x, level);
        if (level != AssertLevel::off) {
            Capacity m = progress();
            if (m > m_prev) throw InternalError("fast_complete_split: progress measure increased");
            if (m_prev2 >= 0 && m >= m_prev2)
                throw InternalError("fast_complete_split: progress stalled over two iterations");
            m_prev2 = m_prev;
            m_prev = m;
        }
    }

    if (neighbor_set(h).count() == 1)
        throw InternalError("fast_complete_split: a single neighbor of s remains");
    added.finish(result);
    return result;
}

std::pair<CapGraph, AugmentationResult> augment(const CapGraph& g, int k, Algo algo,
                                                AssertLevel level) {
    RunStats ext_stats;
    Extension ext = minimal_even_extension(g, k, std::nullopt, &ext_stats);
    Capacity half_degree = ext.star.s_degree() / 2;
    AugmentationResult result = algo == Algo::naive ? naive_complete_split(ext, k, level)
                                                    : fast_complete_split(ext, k, level);
    result.stats.mincut_calls += ext_stats.mincut_calls;
    if (result.total != half_degree)
        throw InternalError("augment: added total does not match half the extension degree");
    CapGraph out = g;
    for (auto& [u, v, c] : result.added) out.add_capacity(u, v, c);
    return {std::move(out), std::move(result)};
}

} // namespace conn2k
