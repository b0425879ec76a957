#pragma once

#include <optional>

#include "conn2k/biset.hpp"
#include "conn2k/mincut.hpp"

namespace conn2k {

/// Outcome of a connectivity predicate. When ok is false the witness
/// certifies the violation and can be re-checked with cut_capacity or
/// f_value.
struct ConnVerdict {
    bool ok = true;
    std::optional<CutResult> cut_witness;
    std::optional<Biset> biset_witness;
};

/// True iff lambda_{(H,c)}(V) >= k. Requires |V| >= 2.
ConnVerdict is_kec_in_v(const StarGraph& h, Capacity k);

/// (2,k)-connectivity in V, decomposed as: lambda(V) >= 2k and, for every
/// x in V, H - x is k-edge-connected in V - x. A failing wall case is
/// reported as the biset (S ∪ {x}, S) so callers always get a biset
/// certificate. Requires |V| >= 3 and k >= 2.
ConnVerdict is_2k_conn_in_v(const StarGraph& h, int k);

/// (su, sv) is admissible iff splitting off one unit keeps the graph
/// (2,k)-connected in V. u = v requires c(su) >= 2.
bool is_pair_admissible(const StarGraph& h, int k, VertexId u, VertexId v);

/// U_{(H,c)}: vertices v whose s-capacity can be reduced by one while
/// keeping (2,k)-connectivity in V. Vertices with c(sv) = 0 are excluded
/// (the reduction needs an edge). Requires h (2,k)-connected in V.
VertexSet u_set(const StarGraph& h, int k);

} // namespace conn2k
