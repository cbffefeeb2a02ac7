#pragma once

#include "gcomm/graph.hpp"

#include <cstdint>

namespace gcomm {

/// Exact integer determinant of the adjacency matrix M[u][v] = 1 iff arc
/// (u,v), by fraction-free Bareiss elimination over checked 128-bit
/// integers. Dimension is capped at 64; overflow is a hard error
/// (std::overflow_error), never a wrong answer.
std::int64_t det_integer(const DiGraph& d);

/// Same elimination on an explicit integer matrix (used by tests).
std::int64_t det_integer_matrix(std::vector<std::vector<std::int64_t>> m);

}  // namespace gcomm
