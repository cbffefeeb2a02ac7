#pragma once

#include "gcomm/graph.hpp"

#include <cstdint>

namespace gcomm {

struct HopcroftKarpResult {
    Matching matching;
    std::size_t phases = 0;  // BFS sweeps run, including the final failing one
};

/// Centralized Hopcroft-Karp over the declared bipartition (left_set vs the
/// rest). Throws if an edge has both endpoints on one side.
HopcroftKarpResult hopcroft_karp(const Graph& g, const VertexSet& left_set);

Matching hopcroft_karp_max_matching(const Graph& g, const VertexSet& left_set);

/// Exact perfect-matching decision for general graphs by branch and bound on
/// a minimum-degree vertex. Odd vertex counts answer false immediately;
/// graphs beyond 40 vertices are rejected.
bool has_perfect_matching_exact(const Graph& g);

/// One-sided randomized perfect-matching test (random substitution into the
/// bipartite adjacency determinant over F_p, p = 2^31 - 1). Never answers
/// true on a PM-free graph; answers false on a PM-possessing graph with
/// probability at most (n/p)^trials.
bool lovasz_pm_test(const Graph& g, const VertexSet& left_set,
                    std::size_t trials, std::uint64_t seed);

}  // namespace gcomm
