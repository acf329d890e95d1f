#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3pack {

/// Vertex labels are non-negative integers, assigned densely at construction
/// and stable under deletions: removing vertices never renumbers survivors.
using VertexId = int;

/// Unordered vertex pair, stored normalized (u < v). No loops.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("loop edge");
  }
  auto operator<=>(const Edge&) const = default;
  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Witness for a failed claw-freeness test: the four vertices of an
/// induced K_{1,3}.
struct ClawWitness {
  VertexId center;
  std::array<VertexId, 3> leaves;
};

/// Undirected simple graph with labeled vertices and value semantics.
///
/// Graphs are cheap to copy at the scales this library targets (a few
/// hundred vertices at most); every editing operation returns a new graph
/// and leaves the receiver untouched, so recursive algorithms can keep
/// the original while working on G - X. Adjacency sets are ordered, which
/// makes every iteration order (and therefore every algorithm built on
/// top) deterministic.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices labeled 0..n-1.
  static Graph with_vertices(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// Triangle 0,1,2 with pendant vertices 3,4,5 attached to 0,1,2.
  static Graph net();

  /// Adds a fresh vertex with the smallest label never used before.
  VertexId add_vertex();
  /// Adds a vertex with an explicit label (must be new and non-negative).
  void add_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);
  void add_edge(const Edge& e) { add_edge(e.u, e.v); }

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  int max_degree() const;
  bool is_regular(int d) const;

  /// Throws "vertex not in graph" for unknown vertices.
  const std::set<VertexId>& neighbors(VertexId v) const;

  std::vector<VertexId> vertices() const;
  std::set<VertexId> vertex_set() const;
  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on V(G) \ S. Labels of survivors are unchanged.
  Graph delete_vertices(const std::set<VertexId>& s) const;
  Graph delete_vertex(VertexId v) const { return delete_vertices({v}); }
  /// Same vertex set with the given edges removed; absent edges are errors.
  Graph delete_edges(const std::vector<Edge>& es) const;
  /// Induced subgraph on a vertex subset (must be ⊆ V).
  Graph induced(const std::set<VertexId>& s) const;
  /// Edge-induced subgraph: vertices are exactly the endpoints of `es`,
  /// edges are exactly `es`. Absent edges are errors.
  Graph edge_subgraph(const std::vector<Edge>& es) const;
  /// Union with another graph on the same label space (vertex sets may
  /// overlap; duplicate edges are merged).
  Graph union_with(const Graph& other) const;

  std::vector<std::set<VertexId>> connected_components() const;
  bool is_connected() const;

  /// Degree-one vertices.
  std::set<VertexId> leaves() const;

  bool is_cycle_graph() const;
  bool is_tree() const;

  /// O(n·d^3) scan of neighborhood triples; fine at desk scale.
  std::optional<ClawWitness> find_claw() const;
  bool is_claw_free() const { return !find_claw().has_value(); }

  /// Line graph plus the bijection from edges of *this to its vertices.
  /// Line-graph vertices are labeled 0..e-1 in lexicographic edge order.
  std::pair<Graph, std::map<Edge, VertexId>> line_graph() const;

  /// All triangles (as sorted vertex triples), lexicographic.
  std::vector<std::array<VertexId, 3>> triangles() const;
  /// Triangles containing a given edge.
  std::vector<VertexId> common_neighbors(VertexId u, VertexId v) const;

  /// Internal-consistency check (adjacency symmetric, no loops, edge
  /// count matches). Throws std::logic_error on violation.
  void check_consistent() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::map<VertexId, std::set<VertexId>> adj_;
  int num_edges_ = 0;
  VertexId next_label_ = 0;
};

/// Vertex connectivity tests by exhaustive small-cut enumeration
/// (desk scale; k up to 4 is what the theorems need).
bool is_k_connected(const Graph& g, int k);
int edge_connectivity_at_most(const Graph& g, int k);  // min(k+1, λ_e(G))
bool is_k_edge_connected(const Graph& g, int k);

/// Maps vertex labels to dense indices 0..n-1 (ascending label order) for
/// bitmask algorithms.
struct IndexMap {
  std::vector<VertexId> label;          // index -> label
  std::map<VertexId, int> index;        // label -> index
  explicit IndexMap(const Graph& g);
  int size() const { return static_cast<int>(label.size()); }
};

}  // namespace p3pack
