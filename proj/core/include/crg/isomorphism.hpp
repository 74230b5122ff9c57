#pragma once

#include <optional>
#include <vector>

#include "crg/graph.hpp"

namespace crg {

/// A certificate bijection a->b preserving adjacency both ways, or absent.
/// Backtracking search over a stable vertex coloring (degree refinement),
/// with structural fast paths for complete and complete multipartite
/// targets. Guarded against inputs above a few hundred vertices.
std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b);

}  // namespace crg
