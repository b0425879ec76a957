#pragma once

#include <tuple>
#include <vector>

#include "conn2k/extension.hpp"

namespace conn2k {

enum class Algo { naive, fast };

/// Runtime checking level for the splitting algorithms. cheap verifies the
/// structural counters (progress measure, budget, parity); full additionally
/// re-checks connectivity and the absence of obstacles, the latter only for
/// |V| <= 6 where the exhaustive detectors are affordable.
enum class AssertLevel { off, cheap, full };

struct AugmentationResult {
    /// Added capacity per vertex pair, u < v, lexicographically sorted and
    /// merged across repeated splits of the same pair.
    std::vector<std::tuple<VertexId, VertexId, Capacity>> added;
    Capacity total = 0;
    RunStats stats;
};

/// Complete admissible splitting off by maximal splits over all pairs of the
/// initial neighbor set of s, in lexicographic (min, max) order. Once a pair
/// is maximally split its blocking biset persists under later splits, so a
/// single pass isolates s. Every pair counts as one maximal-split attempt;
/// a pair whose endpoint vanished resolves to multiplicity 0 without min-cut
/// work but is still an attempt, so maximal_splits is quadratic in |N(s)|.
AugmentationResult naive_complete_split(const Extension& ext, int k,
                                        AssertLevel level = AssertLevel::cheap);

/// Complete admissible splitting off that maintains a stored biset recording
/// known-nonadmissible pairs, so at most two maximal splits per iteration and
/// a linear number of iterations suffice. All nondeterministic choices
/// resolve to the smallest index. The iteration budget is 4n+2; exceeding it
/// is an internal error.
AugmentationResult fast_complete_split(const Extension& ext, int k,
                                       AssertLevel level = AssertLevel::cheap);

/// End-to-end pipeline: minimal even extension, complete admissible
/// splitting off, delete s. Returns the augmented graph (input plus added
/// capacities) and the run record. The result is (2,k)-connected with
/// minimum total added capacity.
std::pair<CapGraph, AugmentationResult> augment(const CapGraph& g, int k, Algo algo,
                                                AssertLevel level = AssertLevel::cheap);

} // namespace conn2k
