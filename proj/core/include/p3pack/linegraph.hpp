#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"
#include "p3pack/oracle.hpp"

namespace p3pack {

/// Edge-disjoint packing into parts of two adjacent edges each.
struct EdgePairPacking {
  std::vector<std::array<Edge, 2>> parts;
  int size() const { return static_cast<int>(parts.size()); }
};

/// Packing paths of g  <->  induced matchings of L(g). Both directions are
/// size-preserving; the round trip is the identity on part sets.
std::vector<Edge> packing_to_induced_matching(const Graph& g, const Packing& p);
Packing induced_matching_to_packing(const Graph& g, const std::vector<Edge>& lineEdges);

/// Maximum edge-disjoint packing into adjacent edge pairs: floor(e/2) parts
/// on every connected graph, built from a maximum matching of the line
/// graph. Disconnected inputs are handled per component and summed.
EdgePairPacking max_edge_pair_packing(const Graph& g);

std::optional<std::string> validate_edge_pair_packing(const Graph& g,
                                                      const EdgePairPacking& q);

/// Partition of E(g) into connected 3-edge parts, via a path factor of the
/// line graph. Hypotheses: e(g) divisible by 3, L(g) connected with at most
/// two end-blocks. Throws std::invalid_argument naming the failed one.
std::vector<std::vector<Edge>> edge_three_factor(const Graph& g);

std::optional<std::string> validate_edge_three_factor(
    const Graph& g, const std::vector<std::vector<Edge>>& parts);

enum class EdgeFactorMode { avoiding, containing };

/// Edge 3-factor with no part containing the 3-vertex path L (avoiding) or
/// with some part containing it (containing). Hypotheses per mode:
/// avoiding needs the leaf-stripped core edge-2-connected; containing needs
/// edge-3-connectivity; both need e(g) divisible by 3.
std::vector<std::vector<Edge>> edge_three_factor_constrained(
    const Graph& g, const std::array<VertexId, 3>& L, EdgeFactorMode mode,
    const OracleLimits& lim = {});

}  // namespace p3pack
