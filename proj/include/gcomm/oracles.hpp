#pragma once

#include "gcomm/graph.hpp"

#include <vector>

namespace gcomm {

/// Partition of [n] into connected components, each sorted ascending,
/// ordered by their minimum vertex (the canonical representative).
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// component_of[v] = minimum vertex of v's component.
std::vector<Vertex> component_representatives(const Graph& g);

bool is_connected(const Graph& g);

/// Connected on the subgraph induced by non-isolated vertices, all degrees
/// even, and at least one edge. Zero-edge graphs are not Eulerian.
bool is_eulerian(const Graph& g);

bool is_bipartite(const Graph& g);

/// True iff the union graph contains a triangle (brute-force scan).
bool has_triangle(const Graph& g);

}  // namespace gcomm
