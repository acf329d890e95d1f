#include "p3pack/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace p3pack {

namespace {

struct BlockFinder {
  const Graph& g;
  std::map<VertexId, int> disc, low;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> block_edges;
  int timer = 0;

  explicit BlockFinder(const Graph& graph) : g(graph) {}

  void pop_block(const Edge& until) {
    std::vector<Edge> es;
    while (!stack.empty()) {
      Edge e = stack.back();
      stack.pop_back();
      es.push_back(e);
      if (e == until) break;
    }
    block_edges.push_back(std::move(es));
  }

  void dfs(VertexId u, VertexId parent) {
    disc[u] = low[u] = timer++;
    for (VertexId w : g.neighbors(u)) {
      if (w == parent) {
        parent = -1;  // skip the tree edge once (simple graph: no parallels)
        continue;
      }
      auto it = disc.find(w);
      if (it == disc.end()) {
        Edge e(u, w);
        stack.push_back(e);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) pop_block(e);
      } else if (it->second < disc[u]) {
        stack.push_back(Edge(u, w));
        low[u] = std::min(low[u], it->second);
      }
    }
  }
};

}  // namespace

ChainDecomposition block_decomposition(const Graph& g) {
  if (g.num_vertices() < 2)
    throw std::invalid_argument("block decomposition needs at least 2 vertices");
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");

  BlockFinder bf(g);
  VertexId root = g.vertices().front();
  bf.dfs(root, -1);

  ChainDecomposition out;
  std::map<VertexId, int> block_count;  // vertex -> number of blocks containing it
  for (auto& es : bf.block_edges) {
    Block b;
    for (const Edge& e : es) {
      b.vertices.insert(e.u);
      b.vertices.insert(e.v);
    }
    b.is_match = es.size() == 1;
    out.blocks.push_back(std::move(b));
  }
  // deterministic block order: by (min vertex, size, vertex set)
  std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
    return std::vector<VertexId>(a.vertices.begin(), a.vertices.end()) <
           std::vector<VertexId>(b.vertices.begin(), b.vertices.end());
  });
  for (const Block& b : out.blocks)
    for (VertexId v : b.vertices) ++block_count[v];
  for (auto& [v, cnt] : block_count)
    if (cnt >= 2) out.cut_vertices.insert(v);
  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
    Block& b = out.blocks[i];
    for (VertexId v : b.vertices)
      if (out.cut_vertices.count(v)) {
        b.boundary.insert(v);
        out.blocks_of_cut[v].push_back(i);
      }
    if (b.boundary.size() <= 1) out.end_blocks.push_back(i);
  }
  return out;
}

int end_block_count(const Graph& g) {
  if (g.num_vertices() < 2) return 0;
  return block_decomposition(g).eb();
}

std::vector<EndChain> end_chains(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  if (g.num_vertices() < 2) return {};
  ChainDecomposition d = block_decomposition(g);
  if (d.eb() <= 2) return {};

  std::vector<EndChain> out;
  for (int start : d.end_blocks) {
    EndChain chain;
    chain.block_path.push_back(start);
    chain.vertices = d.blocks[start].vertices;
    // an end-block in a graph with eb >= 3 has exactly one boundary vertex
    if (d.blocks[start].boundary.size() != 1)
      throw std::logic_error("end-block without boundary in eb>=3 graph");
    VertexId frontier = *d.blocks[start].boundary.begin();
    int cur = start;
    while (true) {
      const auto& owners = d.blocks_of_cut.at(frontier);
      if (owners.size() != 2) break;  // branching cut vertex: stop
      int next = owners[0] == cur ? owners[1] : owners[0];
      if (d.blocks[next].boundary.size() > 2) break;  // branching block: stop
      chain.block_path.push_back(next);
      chain.vertices.insert(d.blocks[next].vertices.begin(),
                            d.blocks[next].vertices.end());
      // the walk must stop before swallowing the whole graph
      if (d.blocks[next].boundary.size() == 1) {
        throw std::logic_error("end-chain walk reached another end-block");
      }
      VertexId nextFrontier = -1;
      for (VertexId b : d.blocks[next].boundary)
        if (b != frontier) nextFrontier = b;
      frontier = nextFrontier;
      cur = next;
    }
    chain.boundary = frontier;
    out.push_back(std::move(chain));
  }
  return out;
}

bool is_chain(const Graph& g) {
  if (!g.is_connected() || g.num_vertices() == 0) return false;
  if (g.num_vertices() == 1) return true;
  return block_decomposition(g).eb() <= 2;
}

bool is_cactus(const Graph& g) {
  if (!g.is_connected() || g.num_vertices() < 2) return false;
  if (block_decomposition(g).eb() < 3) return false;
  for (const EndChain& c : end_chains(g))
    if (c.vertices.size() != 2) return false;
  return true;
}

bool is_edge_chain(const Graph& g) {
  if (!g.is_connected() || g.num_vertices() == 0) return false;
  Graph core = g.delete_vertices(g.leaves());
  int n = core.num_vertices();
  if (n <= 1) return false;
  if (!core.is_connected()) return false;

  // bridges of the core
  std::vector<Edge> bridges;
  for (const Edge& e : core.edges())
    if (!core.delete_edges({e}).is_connected()) bridges.push_back(e);

  Graph pieces = core.delete_edges(bridges);
  auto comps = pieces.connected_components();
  // every piece must be edge-2-connected (>= 3 vertices, since a single
  // vertex or a match is not)
  std::map<VertexId, int> comp_of;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    if (comps[i].size() < 3) return false;
    for (VertexId v : comps[i]) comp_of[v] = i;
  }
  if (comps.size() != bridges.size() + 1) return false;
  // the condensation must be a path
  Graph cond = Graph::with_vertices(static_cast<int>(comps.size()));
  for (const Edge& e : bridges) {
    int a = comp_of[e.u], b = comp_of[e.v];
    if (a == b || cond.has_edge(a, b)) return false;
    cond.add_edge(a, b);
  }
  if (!cond.is_connected()) return false;
  return cond.num_vertices() == 1 || (cond.max_degree() <= 2 && !cond.is_cycle_graph());
}

std::set<VertexId> cut_vertices(const Graph& g) {
  if (g.num_vertices() < 2) return {};
  return block_decomposition(g).cut_vertices;
}

}  // namespace p3pack
