#pragma once

#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

/// Maximum matching in a general graph (blossom contraction, O(V^3)).
std::vector<Edge> max_matching(const Graph& g);

}  // namespace p3pack
