#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conn2k/conncheck.hpp"

namespace conn2k::oracle {

/// A special neighbor t of s with odd c(st) and t in U, plus a family of
/// pairwise inner-disjoint tight bisets with wall {t} whose inner sets cover
/// the other neighbors of s. The unique obstruction to a complete admissible
/// splitting off. vacuous_cover marks the degenerate case N(s) = {t}, where
/// the collection is empty.
struct Obstacle {
    VertexId special = -1;
    std::vector<Biset> bisets;
    bool vacuous_cover = false;
};

/// Exhaustive (2,k)-connectivity-in-V check: evaluates f on all 3^|V|
/// inner/wall/outside assignments, skipping trivial bisets, and returns the
/// first violator. Requires 3 <= |V| <= max_n.
ConnVerdict bf_is_2k_conn(const StarGraph& h, int k, int max_n = 8);

/// Exhaustive minimum over all nonempty proper subsets of V. Requires
/// 2 <= |V| <= max_n.
CutResult bf_restricted_min_cut(const StarGraph& h, int max_n = 20);

/// Obstacle search by exact-cover backtracking over tight wall-{t} bisets,
/// candidates ordered by increasing inner-set size. Requires h
/// (2,k)-connected in V with even s-degree and |V| <= max_n.
std::optional<Obstacle> find_obstacle(const StarGraph& h, int k, int max_n = 8);

struct Augmentation {
    std::vector<std::tuple<VertexId, VertexId, Capacity>> added;
    Capacity total = 0;
};

/// Enumerates all capacity assignments to vertex pairs with total <= budget
/// in increasing total order and returns the first that makes g
/// (2,k)-connected, or nothing. Requires |V| <= 5 and budget <= 6.
std::optional<Augmentation> bf_min_augmentation(const CapGraph& g, int k, Capacity budget);

/// All bisets blocking (su, sv), by full enumeration. Requires |V| <= max_n.
std::vector<Biset> bf_blocking_bisets(const StarGraph& h, int k, VertexId u, VertexId v,
                                      int max_n = 6);

/// Admissibility by full enumeration: true iff no biset blocks the pair.
bool bf_admissible(const StarGraph& h, int k, VertexId u, VertexId v, int max_n = 6);

} // namespace conn2k::oracle
