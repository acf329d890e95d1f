#pragma once

#include <array>
#include <string>
#include <vector>

#include "p3pack/generators.hpp"
#include "p3pack/graph.hpp"
#include "p3pack/oracle.hpp"

namespace p3pack {

/// Result of a constructive factor theorem: a certified packing when `ok`,
/// otherwise a failure description. A failure on an input satisfying the
/// theorem's hypotheses is a counterexample candidate, which the harness
/// re-verifies against the oracle.
struct FactorOutcome {
  bool ok = false;
  Packing packing;
  std::string detail;
  bool oracle_assisted = false;
};

/// 2-connected claw-free, v ≡ 0 mod 3: spanning factor none of whose paths
/// uses edge e (anchored ear assembly, base cycle split away from e).
FactorOutcome factor_avoiding_edge(const Graph& g, Edge e, const OracleLimits& lim = {});

/// 2-connected claw-free, v ≡ k mod 3 (k in {1,2}): a k-vertex path and a
/// (k+3)-vertex path whose removal each leaves a spanning factor.
struct PathPlusFactor {
  std::vector<VertexId> path;
  Packing factor;
};
struct PkOutcome {
  bool ok = false;
  PathPlusFactor short_path;
  PathPlusFactor long_path;
  std::string detail;
  bool oracle_assisted = false;
};
PkOutcome factor_plus_pk(const Graph& g, const OracleLimits& lim = {});

/// 2-connected claw-free, v ≡ 1 mod 3, not a cycle: claw subgraphs whose
/// removal leaves a factor (the theory promises at least two).
struct ClawRemoval {
  VertexId center;
  std::array<VertexId, 3> leaves;
  Packing factor;
};
std::vector<ClawRemoval> factor_minus_claw(const Graph& g, int want = 2,
                                           const OracleLimits& lim = {});

/// 2-connected claw-free, v ≡ 1 mod 3: factor of g - x for any vertex x.
FactorOutcome factor_minus_vertex(const Graph& g, VertexId x,
                                  const OracleLimits& lim = {});

/// 2-connected claw-free, v ≡ 2 mod 3: edges xb at x whose removal (both
/// endpoints) leaves a connected graph with a factor (at least two exist).
struct EdgeRemoval {
  Edge edge;
  Packing factor;
};
std::vector<EdgeRemoval> factor_minus_edge_pair(const Graph& g, VertexId x, int want = 2,
                                                const OracleLimits& lim = {});

/// 3-connected claw-free, v ≡ 2 mod 3: factor of g - {x,y} for any edge xy.
FactorOutcome factor_minus_adjacent_pair(const Graph& g, Edge xy,
                                         const OracleLimits& lim = {});

/// Factor of g with L as one of its paths (equivalently, a factor of g - L).
FactorOutcome factor_containing_path(const Graph& g, const std::array<VertexId, 3>& L,
                                     const OracleLimits& lim = {});

/// 3-connected claw-free, v ≡ 0 mod 3: factor of g with some path using e.
FactorOutcome factor_containing_edge(const Graph& g, Edge e,
                                     const OracleLimits& lim = {});

/// 3-connected claw-free, v ≡ 1 mod 3: factor of g - x avoiding e.
FactorOutcome factor_minus_vertex_and_edge(const Graph& g, VertexId x, Edge e,
                                           const OracleLimits& lim = {});

/// Triangle-replacement graphs: factor of g containing the path L, with
/// control over whether components induce triangles.
enum class DeltaFactorMode { any, all_triangles, no_triangles, mixed };
FactorOutcome delta_factor_through_path(const Graph& g, const std::array<VertexId, 3>& L,
                                        DeltaFactorMode mode = DeltaFactorMode::any,
                                        const OracleLimits& lim = {});

/// Combinatorial characterization of the 3-edge subsets whose removal kills
/// every factor of a 2-connected triangle-replacement graph.
enum class DeltaObstruction { none, claw, triangle, split_disconnected, split_cut };
struct DeltaThreeEdgeResult {
  bool has_factor = false;
  DeltaObstruction obstruction = DeltaObstruction::none;
};
DeltaThreeEdgeResult delta_three_edge_test(const Graph& g, const std::array<Edge, 3>& E);

/// Factor of g - E for any two edges of a connected triangle-replacement
/// graph (per-triangle paths, or rerouted through the spoiled triangle).
FactorOutcome delta_two_edge_factor(const Graph& g, const std::array<Edge, 2>& E,
                                    const OracleLimits& lim = {});

}  // namespace p3pack
