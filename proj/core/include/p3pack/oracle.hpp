#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

/// A set of vertex-disjoint 3-vertex paths. Each triple (a,b,c) means the
/// path a-b-c, so ab and bc must be edges of the host graph.
struct Packing {
  std::vector<std::array<VertexId, 3>> paths;

  int size() const { return static_cast<int>(paths.size()); }
  std::set<VertexId> covered() const;
  void append(const Packing& other);
};

/// Validates a packing against its host: edges present, vertices disjoint.
/// Returns an error description, or nullopt when valid.
std::optional<std::string> validate_packing(const Graph& g, const Packing& p);
/// Validates and additionally requires the packing to span V(g).
std::optional<std::string> validate_factor(const Graph& g, const Packing& p);

/// Constraints for factor queries: paths may not use forbidden vertices or
/// edges; a required path is placed as one component; a required edge must
/// appear inside some component.
struct PackingConstraint {
  std::set<VertexId> forbidden_vertices;
  std::set<Edge> forbidden_edges;
  std::optional<std::array<VertexId, 3>> required_path;
  std::optional<Edge> required_edge;
};

/// Thrown when an exact-search input exceeds the configured size cap.
struct OracleCapError : std::runtime_error {
  explicit OracleCapError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleLimits {
  int packing_cap = 24;     // vertices, for path-packing searches
  int domination_cap = 30;  // vertices, for domination searches
  int edge_cap = 64;        // edges, for induced-matching search
};

/// Exact maximum number of disjoint 3-vertex paths, with one witness.
/// Branch-and-memo over the bitmask of remaining vertices, branching on the
/// lowest remaining vertex (unused, or end/center of a path).
std::pair<int, Packing> lambda_exact(const Graph& g, const OracleLimits& lim = {});

/// Spanning variant: does g (minus forbidden vertices) admit a partition
/// into 3-vertex paths honoring the constraint? Returns a witness if so.
/// A vertex count not divisible by 3 returns false rather than erroring.
std::pair<bool, std::optional<Packing>> has_lambda_factor(
    const Graph& g, const PackingConstraint& c = {}, const OracleLimits& lim = {});

/// Exact maximum packing of *induced* 3-vertex paths (no chord between the
/// two path ends).
std::pair<int, Packing> lambda_induced_exact(const Graph& g, const OracleLimits& lim = {});

/// Exact maximum induced matching: edges pairwise non-adjacent with no edge
/// of g joining their endpoints.
std::pair<int, std::vector<Edge>> max_induced_matching(const Graph& g,
                                                       const OracleLimits& lim = {});

/// Exact minimum dominating set (branch and bound) and the independent
/// variant.
std::pair<int, std::set<VertexId>> domination_exact(const Graph& g,
                                                    const OracleLimits& lim = {});
std::pair<int, std::set<VertexId>> independent_domination_exact(
    const Graph& g, const OracleLimits& lim = {});

/// Exact maximum matching size by search (test oracle for the polynomial
/// matcher; intended for small graphs only).
int max_matching_exact_small(const Graph& g);

}  // namespace p3pack
