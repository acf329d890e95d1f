#include "p3pack/linegraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "p3pack/constructive.hpp"
#include "p3pack/decomposition.hpp"
#include "p3pack/matching.hpp"
#include "p3pack/packer.hpp"

namespace p3pack {

namespace {

std::vector<Edge> line_vertex_to_edge(const std::map<Edge, VertexId>& id) {
  std::vector<Edge> rev(id.size(), Edge(0, 1));
  for (const auto& [e, v] : id) rev[v] = e;
  return rev;
}

VertexId shared_endpoint(const Edge& e, const Edge& f) {
  for (VertexId v : {e.u, e.v})
    if (f.touches(v)) return v;
  throw std::invalid_argument("edges do not share an endpoint");
}

}  // namespace

std::vector<Edge> packing_to_induced_matching(const Graph& g, const Packing& p) {
  if (auto err = validate_packing(g, p))
    throw std::invalid_argument("invalid packing: " + *err);
  auto [lg, id] = g.line_graph();
  std::vector<Edge> out;
  for (const auto& t : p.paths)
    out.emplace_back(id.at(Edge(t[0], t[1])), id.at(Edge(t[1], t[2])));
  std::sort(out.begin(), out.end());
  return out;
}

Packing induced_matching_to_packing(const Graph& g, const std::vector<Edge>& lineEdges) {
  auto [lg, id] = g.line_graph();
  std::vector<Edge> rev = line_vertex_to_edge(id);
  Packing p;
  for (const Edge& le : lineEdges) {
    if (!lg.has_edge(le)) throw std::invalid_argument("not an edge of the line graph");
    Edge e = rev[le.u], f = rev[le.v];
    VertexId b = shared_endpoint(e, f);
    p.paths.push_back({e.other(b), b, f.other(b)});
  }
  if (auto err = validate_packing(g, p))
    throw std::invalid_argument("matching does not map to a packing: " + *err);
  return p;
}

EdgePairPacking max_edge_pair_packing(const Graph& g) {
  EdgePairPacking out;
  for (const auto& compVerts : g.connected_components()) {
    Graph comp = g.induced(compVerts);
    if (comp.num_edges() == 0) continue;
    auto [lg, id] = comp.line_graph();
    std::vector<Edge> rev = line_vertex_to_edge(id);
    std::vector<Edge> matching = max_matching(lg);
    if (static_cast<int>(matching.size()) != comp.num_edges() / 2)
      throw InternalCheckError(
          "line-graph matching below the half-edge bound on a connected component");
    for (const Edge& m : matching) out.parts.push_back({rev[m.u], rev[m.v]});
  }
  return out;
}

std::optional<std::string> validate_edge_pair_packing(const Graph& g,
                                                      const EdgePairPacking& q) {
  std::set<Edge> used;
  for (const auto& [e, f] : q.parts) {
    if (!g.has_edge(e) || !g.has_edge(f)) return "part edge not in host";
    bool adjacent = e.touches(f.u) || e.touches(f.v);
    if (!adjacent) return "part edges not adjacent";
    if (!used.insert(e).second || !used.insert(f).second) return "edge reused";
  }
  return std::nullopt;
}

std::vector<std::vector<Edge>> edge_three_factor(const Graph& g) {
  if (g.num_edges() % 3 != 0)
    throw std::invalid_argument("edge count not divisible by three");
  auto [lg, id] = g.line_graph();
  if (!lg.is_connected()) throw std::invalid_argument("line graph not connected");
  if (end_block_count(lg) > 2)
    throw std::invalid_argument("line graph has more than two end-blocks");
  std::vector<Edge> rev = line_vertex_to_edge(id);
  Packing p = pack_chain(lg);
  if (3 * p.size() != lg.num_vertices())
    throw InternalCheckError("line-graph chain packing is not spanning");
  std::vector<std::vector<Edge>> parts;
  for (const auto& t : p.paths) parts.push_back({rev[t[0]], rev[t[1]], rev[t[2]]});
  if (auto err = validate_edge_three_factor(g, parts)) throw InternalCheckError(*err);
  return parts;
}

std::optional<std::string> validate_edge_three_factor(
    const Graph& g, const std::vector<std::vector<Edge>>& parts) {
  std::set<Edge> used;
  for (const auto& part : parts) {
    if (part.size() != 3) return "part without exactly three edges";
    for (const Edge& e : part) {
      if (!g.has_edge(e)) return "part edge not in host";
      if (!used.insert(e).second) return "edge reused across parts";
    }
    if (!g.edge_subgraph(part).is_connected()) return "part not connected";
  }
  if (static_cast<int>(used.size()) != g.num_edges()) return "parts do not cover E";
  return std::nullopt;
}

namespace {

// Spanning path factor of `lg` with no path containing both marked
// vertices; exact search, used for the separation variant below.
std::optional<Packing> separated_factor(const Graph& lg, VertexId a, VertexId b) {
  using Mask = std::uint64_t;
  IndexMap im(lg);
  int n = im.size();
  if (n > 64 || n % 3 != 0) return std::nullopt;
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : lg.edges()) {
    adj[im.index.at(e.u)] |= Mask(1) << im.index.at(e.v);
    adj[im.index.at(e.v)] |= Mask(1) << im.index.at(e.u);
  }
  int ia = im.index.at(a), ib = im.index.at(b);
  Mask full = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
  std::unordered_set<Mask> dead;
  std::vector<std::array<int, 3>> stack;
  std::function<bool(Mask)> rec = [&](Mask mask) -> bool {
    if (mask == 0) return true;
    if (dead.count(mask)) return false;
    int v = std::countr_zero(mask);
    auto try_path = [&](int p0, int p1, int p2) -> bool {
      Mask used = (Mask(1) << p0) | (Mask(1) << p1) | (Mask(1) << p2);
      if ((used >> ia & 1) && (used >> ib & 1)) return false;  // keep them apart
      stack.push_back({p0, p1, p2});
      if (rec(mask & ~used)) return true;
      stack.pop_back();
      return false;
    };
    for (Mask ma = adj[v] & mask; ma;) {
      int x = std::countr_zero(ma);
      ma &= ma - 1;
      for (Mask mb = adj[v] & mask; mb;) {  // v centered: x - v - y
        int y = std::countr_zero(mb);
        mb &= mb - 1;
        if (y <= x) continue;
        if (try_path(x, v, y)) return true;
      }
      for (Mask mb = adj[x] & mask & ~(Mask(1) << v); mb;) {  // v end: v - x - y
        int y = std::countr_zero(mb);
        mb &= mb - 1;
        if (try_path(v, x, y)) return true;
      }
    }
    dead.insert(mask);
    return false;
  };
  if (!rec(full)) return std::nullopt;
  Packing p;
  for (const auto& t : stack)
    p.paths.push_back({im.label[t[0]], im.label[t[1]], im.label[t[2]]});
  return p;
}

}  // namespace

std::vector<std::vector<Edge>> edge_three_factor_constrained(
    const Graph& g, const std::array<VertexId, 3>& L, EdgeFactorMode mode,
    const OracleLimits& lim) {
  if (g.num_edges() % 3 != 0)
    throw std::invalid_argument("edge count not divisible by three");
  if (!g.has_edge(L[0], L[1]) || !g.has_edge(L[1], L[2]) || L[0] == L[2])
    throw std::invalid_argument("not a 3-vertex path");
  auto [lg, id] = g.line_graph();
  std::vector<Edge> rev = line_vertex_to_edge(id);
  VertexId la = id.at(Edge(L[0], L[1]));
  VertexId lb = id.at(Edge(L[1], L[2]));

  std::vector<std::vector<Edge>> parts;
  auto from_packing = [&](const Packing& p) {
    parts.clear();
    for (const auto& t : p.paths) parts.push_back({rev[t[0]], rev[t[1]], rev[t[2]]});
    if (auto err = validate_edge_three_factor(g, parts)) throw InternalCheckError(*err);
  };

  if (mode == EdgeFactorMode::avoiding) {
    Graph core = g.delete_vertices(g.leaves());
    if (core.num_vertices() < 3 || !is_k_edge_connected(core, 2))
      throw std::invalid_argument("leaf-stripped core not edge-2-connected");
    // a part avoids L iff it misses one of L's two edges
    auto sep = separated_factor(lg, la, lb);
    if (!sep) throw InternalCheckError("no separated line-graph factor found");
    from_packing(*sep);
    for (const auto& part : parts) {
      bool hasA = std::count(part.begin(), part.end(), rev[la]) > 0;
      bool hasB = std::count(part.begin(), part.end(), rev[lb]) > 0;
      if (hasA && hasB) throw InternalCheckError("part contains the avoided path");
    }
    return parts;
  }

  // containing: a part must hold both of L's edges
  if (!is_k_edge_connected(g, 3))
    throw std::invalid_argument("graph not edge-3-connected");
  auto r = factor_containing_edge(lg, Edge(la, lb), lim);
  if (!r.ok)
    throw InternalCheckError("no line-graph factor through the path's edge pair: " +
                             r.detail);
  from_packing(r.packing);
  bool found = false;
  for (const auto& part : parts) {
    bool hasA = std::count(part.begin(), part.end(), rev[la]) > 0;
    bool hasB = std::count(part.begin(), part.end(), rev[lb]) > 0;
    if (hasA && hasB) found = true;
  }
  if (!found) throw InternalCheckError("no part contains the required path");
  return parts;
}

}  // namespace p3pack
