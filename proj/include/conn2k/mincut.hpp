#pragma once

#include <vector>

#include "conn2k/graph.hpp"

namespace conn2k {

/// A cut together with one side achieving it. For the restricted problem the
/// reported side is the one not containing s, so side is a nonempty proper
/// subset of V.
struct CutResult {
    Capacity value = 0;
    VertexSet side;
};

struct MaOrdering {
    std::vector<VertexId> order;
    /// Attachment weight of the final vertex; equals the minimum cut
    /// separating the last two vertices of the ordering (pendant-pair
    /// property).
    Capacity last_cut_value = 0;
};

/// Maximum-adjacency ordering beginning at start. Among maximum-attachment
/// candidates the lowest index is picked, so the ordering is deterministic.
MaOrdering ma_order(const CapGraph& g, VertexId start);

/// lambda_{(H,c)}(V): minimum of c(delta_H(S)) over nonempty proper S of V,
/// i.e. the min cut of H among cuts with both sides meeting V. Contraction
/// loop in Stoer-Wagner style; every phase's MA ordering starts at the
/// supernode containing s, so the last supernode of a phase never consists
/// of s alone and every recorded candidate respects the restriction.
/// Requires |V| >= 2.
CutResult restricted_min_cut(const StarGraph& h);

/// Ordinary global min cut of g (both sides nonempty). Requires n >= 2.
CutResult global_min_cut(const CapGraph& g);

} // namespace conn2k
