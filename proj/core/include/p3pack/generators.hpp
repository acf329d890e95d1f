#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

/// Cubic multigraph: parallel edges allowed, no loops. Vertices 0..n-1.
/// Used only as the pre-image type for triangle-replacement graphs.
struct CubicMultigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool is_cubic() const;
  bool is_connected() const;
  /// 0 disconnected, else min(3, vertex connectivity); a two-vertex bundle
  /// of k parallel edges counts as min(3, k)-connected (internally disjoint
  /// paths), matching the connectivity of its triangle-replacement.
  int connectivity() const;
  std::vector<int> incident_edges(int v) const;
};

/// Replaces every vertex of a cubic multigraph by a triangle. The result is
/// cubic, claw-free, has every vertex in exactly one triangle, and inherits
/// the pre-image's connectivity class.
Graph gen_delta(const CubicMultigraph& f);

/// Cubic with every vertex in exactly one triangle.
bool is_delta_graph(const Graph& g);

/// Contraction of each triangle back to the pre-image, with the edge
/// correspondence (multigraph edge index -> host edge).
struct DeltaPreimage {
  CubicMultigraph f;
  std::vector<std::array<VertexId, 3>> triangles;  // pre-image vertex -> triangle
  std::map<VertexId, int> triangle_of;
  std::vector<Edge> edge_of;  // pre-image edge index -> host edge
};
std::optional<DeltaPreimage> delta_preimage(const Graph& g);

/// Validates membership in the no-factor family: connected, max degree 3,
/// every vertex of degree 2 or 3 in exactly one triangle, at least three
/// leaves. Returns a violation description or nullopt.
std::optional<std::string> validate_family_s(const Graph& g);

/// Builds a family member from a tree skeleton: every internal node becomes
/// a triangle, leaves stay leaves. Internal nodes must have degree <= 3.
Graph gen_family_s(const Graph& skeleton);
/// Random skeleton with the given number of internal nodes.
Graph gen_family_s_random(int internal_nodes, std::uint64_t seed);

/// Two disjoint cycles joined through one new vertex attached to an edge of
/// each; the distinguished edges are those two cycle edges.
struct ConstructionR {
  Graph graph;
  Edge a, b;
};
ConstructionR gen_construction_r(int na, int nb);

/// Two disjoint cycles joined through two new adjacent vertices; the
/// distinguished edge is the one between the new vertices.
struct ConstructionQ {
  Graph graph;
  Edge e;
};
ConstructionQ gen_construction_q(int na, int nb);

/// The 9-vertex graph: net plus a triangle, each net leaf joined to the two
/// triangle vertices of different index.
struct ConstructionH {
  Graph graph;
  std::array<VertexId, 3> triangle;
};
ConstructionH gen_construction_h();

/// Pairing-model cubic multigraph (no loops; parallels allowed).
CubicMultigraph gen_random_cubic_multigraph(int n, std::uint64_t seed);
/// Simple cubic graph by rejection.
Graph gen_random_cubic(int n, std::uint64_t seed);
/// Rejection-filtered variant with a required connectivity class (1..3).
/// Throws after `tries` failures.
CubicMultigraph gen_random_cubic_multigraph_connected(int n, std::uint64_t seed,
                                                      int connectivity,
                                                      int tries = 10000);

enum class ClawFreeMethod { linegraph, local_complete };

/// Random connected claw-free graph on exactly n vertices.
Graph gen_random_clawfree(int n, std::uint64_t seed,
                          ClawFreeMethod method = ClawFreeMethod::linegraph);
/// As above but 2-connected (rejection; throws after `tries`).
Graph gen_random_clawfree_2connected(int n, std::uint64_t seed,
                                     ClawFreeMethod method = ClawFreeMethod::linegraph,
                                     int tries = 10000);

/// Random claw-free cactus (triangle chains with pendants, or a clique core
/// with pendant leaves).
Graph gen_cactus(std::uint64_t seed);

Graph gen_cycle(int n);
Graph gen_net();
Graph gen_prism();

/// k disjoint copies of K4 (for sharpness checks of the cubic bound).
Graph disjoint_k4s(int k);

/// One generated instance plus its manifest entry (family, params, seed,
/// distinguished vertices/edges) for file output.
struct GeneratedInstance {
  Graph graph;
  std::string family;
  std::map<std::string, long> params;
  std::uint64_t seed = 0;
  std::map<std::string, std::vector<VertexId>> distinguished;
};

/// Dispatch by family name: net, cycle, prism, delta, familyS, cactus,
/// constructionR, constructionQ, constructionH, cubicRandom, clawfreeRandom.
/// Unknown family or bad parameters throw std::invalid_argument.
std::vector<GeneratedInstance> generate_family(const std::string& family,
                                               const std::map<std::string, long>& params,
                                               std::uint64_t seed, int count);

}  // namespace p3pack
