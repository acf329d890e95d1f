#pragma once

#include <optional>
#include <set>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

/// Longest cycle, as a vertex sequence in cyclic order (empty if none).
/// Exact DFS with reachability pruning; deterministic tie-breaking (first
/// longest found while scanning vertices and neighbors in ascending order).
std::vector<VertexId> longest_cycle(const Graph& g);

/// Longest cycle containing both given vertices (empty if none). For an
/// edge xy this is exactly the longest cycle that contains xy or has xy as
/// a chord.
std::vector<VertexId> longest_cycle_through(const Graph& g, VertexId x, VertexId y);

std::optional<std::vector<VertexId>> hamiltonian_cycle(const Graph& g);

/// Longest path with >= 2 edges whose endpoints lie in `base`, all interior
/// vertices outside it, returned endpoint-to-endpoint. nullopt if none.
std::optional<std::vector<VertexId>> longest_ear(const Graph& g,
                                                 const std::set<VertexId>& base);

}  // namespace p3pack
