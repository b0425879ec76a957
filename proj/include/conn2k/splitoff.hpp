#pragma once

#include <optional>

#include "conn2k/biset.hpp"
#include "conn2k/mincut.hpp"

namespace conn2k {

/// Operation counters threaded through the splitting subroutines.
struct RunStats {
    long long maximal_splits = 0;
    long long mincut_calls = 0;
    long long iterations = 0;
};

/// (H,c)_v^alpha: decrease c(sv) by alpha, deleting the edge at 0.
StarGraph reduce(const StarGraph& h, VertexId v, Capacity alpha);

/// (H,c)_{u,v}^alpha: decrease c(su) and c(sv) by alpha and increase c(uv)
/// by alpha. Zero-capacity edges are removed; the loop arising when u = v
/// is discarded (2*alpha <= c(su) required in that case).
StarGraph split(const StarGraph& h, VertexId u, VertexId v, Capacity alpha);

/// Result of a maximal reduction or splitting under the plain
/// k-edge-connectivity-in-V requirement. The witness (present iff the
/// residual s-capacity is positive) is a set S with the reduced/split
/// endpoints inside and c(delta(S)) = k (reduce) or <= k+1 (split) in the
/// returned graph.
struct MaxKecResult {
    Capacity alpha = 0;
    StarGraph graph;
    std::optional<VertexSet> witness;
};

/// Largest alpha with (H,c)_v^alpha still k-edge-connected in V, computed
/// with a single restricted min-cut call as
/// alpha = min{gamma, gamma - k + lambda(H_gamma)} where gamma = c(sv).
MaxKecResult max_reduce_kec(const StarGraph& h, Capacity k, VertexId v, RunStats* stats = nullptr);

/// Largest alpha with (H,c)_{u,v}^alpha still k-edge-connected in V:
/// alpha = min{gamma, floor(gamma + lambda(H_gamma)/2 - k/2)} with
/// gamma = min(c(su), c(sv)). Requires u != v.
MaxKecResult max_split_kec(const StarGraph& h, Capacity k, VertexId u, VertexId v,
                           RunStats* stats = nullptr);

struct MaxReduce2kResult {
    Capacity alpha = 0;
    StarGraph graph;
};

/// (H,c)_v^max under (2,k)-connectivity in V: the minimum of the threshold-2k
/// reduction on H and the threshold-k reductions on H - x for every x in
/// V - v. n+1 min-cut calls. Requires |V| >= 3.
MaxReduce2kResult max_reduce_2k(const StarGraph& h, int k, VertexId v, RunStats* stats = nullptr);

struct SplitOutcome {
    StarGraph graph;
    Capacity alpha = 0;
    /// Present iff both residual capacities c(su), c(sv) are positive; then
    /// it blocks (su, sv) in the returned graph and its wall has at most one
    /// vertex.
    std::optional<Biset> blocker;
};

/// (H,c)_{u,v}^max under (2,k)-connectivity in V. The blocker is built from
/// the binding constraint: (S,S) for the threshold-2k case, (S ∪ {x}, S) for
/// a deleted third vertex x, (S ∪ {u}, S) or (S ∪ {v}, S) for a deleted
/// endpoint. Binding-case order: threshold-2k first, then x ascending, then
/// u, then v. Requires u != v and |V| >= 3.
SplitOutcome max_split_2k(const StarGraph& h, int k, VertexId u, VertexId v,
                          RunStats* stats = nullptr);

} // namespace conn2k
