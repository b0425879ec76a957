#include "conn2k/oracle.hpp"

#include <algorithm>

#include "conn2k/splitoff.hpp"

namespace conn2k::oracle {

namespace {

// Enumerates every biset over [0, n) by a base-3 role per vertex
// (0 = outside, 1 = wall, 2 = inner) and calls visit(biset). visit returning
// true stops the enumeration.
template <class Visit>
void for_each_biset(int n, Visit visit) {
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= 3;
    for (long long code = 0; code < count; ++code) {
        VertexSet inner(n), outer(n);
        long long c = code;
        for (int v = 0; v < n; ++v) {
            int role = static_cast<int>(c % 3);
            c /= 3;
            if (role >= 1) outer.add(v);
            if (role == 2) inner.add(v);
        }
        if (visit(Biset(std::move(outer), std::move(inner)))) return;
    }
}

VertexSet lift_to_star(const VertexSet& side, int star_size) {
    VertexSet out(star_size);
    for (int v : side.members()) out.add(v);
    return out;
}

} // namespace

ConnVerdict bf_is_2k_conn(const StarGraph& h, int k, int max_n) {
    int n = h.inner_count();
    if (n < 3) throw InvalidArgument("bf_is_2k_conn: |V| >= 3 required");
    if (n > max_n) throw InvalidArgument("bf_is_2k_conn: |V| exceeds the oracle bound");
    if (k < 2) throw InvalidArgument("bf_is_2k_conn: k >= 2 required");
    ConnVerdict verdict;
    for_each_biset(n, [&](Biset x) {
        if (x.is_trivial()) return false;
        if (f_value(h, k, x) < 2 * Capacity(k)) {
            verdict.ok = false;
            verdict.biset_witness = std::move(x);
            return true;
        }
        return false;
    });
    return verdict;
}

CutResult bf_restricted_min_cut(const StarGraph& h, int max_n) {
    int n = h.inner_count();
    if (n < 2) throw InvalidArgument("bf_restricted_min_cut: |V| >= 2 required");
    if (n > max_n) throw InvalidArgument("bf_restricted_min_cut: |V| exceeds the oracle bound");
    CutResult best;
    bool have = false;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet side(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) side.add(v);
        Capacity value = h.graph.cut_capacity(lift_to_star(side, n + 1));
        if (!have || value < best.value) {
            best = {value, std::move(side)};
            have = true;
        }
    }
    return best;
}

std::optional<Obstacle> find_obstacle(const StarGraph& h, int k, int max_n) {
    int n = h.inner_count();
    if (n > max_n) throw InvalidArgument("find_obstacle: |V| exceeds the oracle bound");
    if (h.s_degree() % 2 != 0) throw InvalidArgument("find_obstacle: s-degree must be even");
    if (!bf_is_2k_conn(h, k, max_n).ok)
        throw InvalidArgument("find_obstacle: graph is not (2,k)-connected in V");

    auto nbrs = h.s_neighbors();
    for (VertexId t : nbrs) {
        if (h.graph.capacity(h.s(), t) % 2 == 0) continue;
        if (!bf_is_2k_conn(reduce(h, t, 1), k, max_n).ok) continue; // t must lie in U

        // Vertices of N(s) - {t} that the disjoint family has to cover.
        std::vector<VertexId> target;
        for (VertexId v : nbrs)
            if (v != t) target.push_back(v);

        if (target.empty()) {
            Obstacle ob;
            ob.special = t;
            ob.vacuous_cover = true;
            return ob;
        }

        // Nontrivial bisets with wall exactly {t} and f = 2k, by increasing
        // inner-set size so small covers are found first.
        std::vector<Biset> candidates;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            if ((mask >> t) & 1) continue;
            VertexSet inner(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) inner.add(v);
            VertexSet outer = inner;
            outer.add(t);
            if (outer.is_full()) continue;
            Biset b(std::move(outer), std::move(inner));
            if (f_value(h, k, b) == 2 * Capacity(k)) candidates.push_back(std::move(b));
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Biset& a, const Biset& b) { return a.inner.count() < b.inner.count(); });

        std::vector<Biset> chosen;
        VertexSet used(n);
        auto backtrack = [&](auto&& self) -> bool {
            VertexId uncovered = -1;
            for (VertexId v : target)
                if (!used.contains(v)) {
                    uncovered = v;
                    break;
                }
            if (uncovered < 0) return true;
            for (const Biset& b : candidates) {
                if (!b.inner.contains(uncovered)) continue;
                if (!(b.inner & used).empty()) continue;
                chosen.push_back(b);
                VertexSet saved = used;
                used = used | b.inner;
                if (self(self)) return true;
                used = std::move(saved);
                chosen.pop_back();
            }
            return false;
        };
        if (backtrack(backtrack)) {
            Obstacle ob;
            ob.special = t;
            ob.bisets = std::move(chosen);
            return ob;
        }
    }
    return std::nullopt;
}

std::optional<Augmentation> bf_min_augmentation(const CapGraph& g, int k, Capacity budget) {
    int n = g.vertex_count();
    if (n > 5) throw InvalidArgument("bf_min_augmentation: |V| <= 5 required");
    if (n < 3) throw InvalidArgument("bf_min_augmentation: |V| >= 3 required");
    if (budget < 0 || budget > 6) throw InvalidArgument("bf_min_augmentation: budget in [0, 6] required");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::vector<Capacity> amounts(pairs.size(), 0);
    std::optional<Augmentation> found;

    auto check = [&]() {
        CapGraph aug = g;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (amounts[i] > 0) aug.add_capacity(pairs[i].first, pairs[i].second, amounts[i]);
        if (!bf_is_2k_conn(StarGraph::attach(aug), k).ok) return false;
        Augmentation a;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (amounts[i] > 0) a.added.emplace_back(pairs[i].first, pairs[i].second, amounts[i]);
            a.total += amounts[i];
        }
        found = std::move(a);
        return true;
    };

    // Totals in increasing order; within a total, assignments in
    // lexicographic order over the pair list.
    for (Capacity total = 0; total <= budget && !found; ++total) {
        auto assign = [&](auto&& self, std::size_t idx, Capacity left) -> bool {
            if (idx + 1 == amounts.size()) {
                amounts[idx] = left;
                return check();
            }
            for (Capacity a = 0; a <= left; ++a) {
                amounts[idx] = a;
                if (self(self, idx + 1, left - a)) return true;
            }
            return false;
        };
        assign(assign, 0, total);
    }
    return found;
}

std::vector<Biset> bf_blocking_bisets(const StarGraph& h, int k, VertexId u, VertexId v, int max_n) {
    int n = h.inner_count();
    if (n > max_n) throw InvalidArgument("bf_blocking_bisets: |V| exceeds the oracle bound");
    std::vector<Biset> out;
    for_each_biset(n, [&](Biset x) {
        if (blocks(h, k, x, u, v)) out.push_back(std::move(x));
        return false;
    });
    return out;
}

bool bf_admissible(const StarGraph& h, int k, VertexId u, VertexId v, int max_n) {
    return bf_blocking_bisets(h, k, u, v, max_n).empty();
}

} // namespace conn2k::oracle
