#pragma once

#include "conn2k/graph.hpp"

namespace conn2k {

/// Nested pair of vertex subsets over the ground set V of a star graph
/// (s is never a member). inner ⊆ outer.
struct Biset {
    VertexSet outer;
    VertexSet inner;

    Biset() = default;
    Biset(VertexSet outer_, VertexSet inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
        if (outer.ground_size() != inner.ground_size())
            throw InvalidArgument("biset: ground-set mismatch between inner and outer");
        if (!inner.is_subset_of(outer)) throw InvalidArgument("biset: inner must be a subset of outer");
    }

    static Biset empty(int ground_size) {
        return Biset(VertexSet(ground_size), VertexSet(ground_size));
    }

    int ground_size() const { return outer.ground_size(); }
    VertexSet wall() const { return outer - inner; }

    /// Trivial iff the inner set is empty or the outer set is the whole
    /// ground set; the wall is preserved under complementation.
    bool is_trivial() const { return inner.empty() || outer.is_full(); }

    Biset complement() const { return Biset(inner.complement(), outer.complement()); }

    friend Biset biset_union(const Biset& x, const Biset& y) {
        return Biset(x.outer | y.outer, x.inner | y.inner);
    }
    friend Biset biset_intersect(const Biset& x, const Biset& y) {
        return Biset(x.outer & y.outer, x.inner & y.inner);
    }
    friend Biset biset_minus(const Biset& x, const Biset& y) {
        return biset_intersect(x, y.complement());
    }

    bool operator==(const Biset& o) const = default;
};

/// f(X) = k*|wall(X)| + c(delta_H(X_I, (V+s) - X_O)). s lies outside every
/// outer set, so capacity from the inner set to s counts in the cut term.
Capacity f_value(const StarGraph& h, int k, const Biset& x);

/// The blocking predicate for the pair (su, sv): X nontrivial and either
/// f(X) <= 2k+1 with u,v in the inner set, or f(X) = 2k with u,v in the
/// outer set and at least one of them inner. u = v is permitted.
bool blocks(const StarGraph& h, int k, const Biset& x, VertexId u, VertexId v);

/// True iff X blocks some pair (su, sv) with u != v, both neighbors of s.
bool is_horrifying(const StarGraph& h, int k, const Biset& x);

} // namespace conn2k
