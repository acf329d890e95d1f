#include "p3pack/constructive.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "p3pack/decomposition.hpp"
#include "p3pack/packer.hpp"
#include "p3pack/search.hpp"

namespace p3pack {

namespace {

void need(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool uses_edge(const Packing& p, const Edge& e) {
  for (const auto& t : p.paths)
    if (Edge(t[0], t[1]) == e || Edge(t[1], t[2]) == e) return true;
  return false;
}

FactorOutcome fail(std::string detail) {
  FactorOutcome out;
  out.detail = std::move(detail);
  return out;
}

FactorOutcome success(Packing p, bool oracle = false) {
  FactorOutcome out;
  out.ok = true;
  out.packing = std::move(p);
  out.oracle_assisted = oracle;
  return out;
}

// Splits a cycle into consecutive triples with the cut placed right after
// `cutFrom` so that the edge (cutFrom, next) is never used.
Packing split_cycle_avoiding(const std::vector<VertexId>& cycle, const Edge& e) {
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) {
    if (Edge(cycle[i], cycle[(i + 1) % n]) == e) return split_cycle(cycle, (i + 1) % n);
  }
  return split_cycle(cycle, 0);  // e is a chord; any split avoids it
}

}  // namespace

FactorOutcome factor_avoiding_edge(const Graph& g, Edge e, const OracleLimits&) {
  need(g.num_vertices() % 3 == 0, "order must be divisible by three");
  need(g.has_edge(e), "edge not in graph");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 2), "graph not 2-connected");

  std::function<std::optional<Packing>(const Graph&)> go =
      [&](const Graph& cur) -> std::optional<Packing> {
    if (!cur.has_edge(e)) {
      // the anchor lost an endpoint along the way; any factor will do
      return pack_two_connected(cur);
    }
    if (cur.is_cycle_graph())
      return split_cycle_avoiding(longest_cycle(cur), e);
    EarAssembly asmb = ear_assembly(cur, e);
    if (asmb.r() == 0) return split_cycle_avoiding(asmb.base_cycle, e);
    Packing p = split_path_sequence(asmb.ears.back());
    Graph rest = cur.delete_vertices(p.covered());
    auto q = go(rest);
    if (!q) return std::nullopt;
    p.append(*q);
    return p;
  };

  auto p = go(g);
  if (!p) return fail("recursive ear packing failed");
  if (uses_edge(*p, e)) throw InternalCheckError("avoiding-edge factor uses the edge");
  if (auto err = validate_factor(g, *p)) throw InternalCheckError(*err);
  return success(*p);
}

namespace {

// Hamiltonian path of the induced subgraph on a handful of vertices.
std::optional<std::vector<VertexId>> tiny_hamiltonian_path(const Graph& g,
                                                           std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  do {
    bool ok = true;
    for (size_t i = 0; i + 1 < verts.size(); ++i)
      if (!g.has_edge(verts[i], verts[i + 1])) {
        ok = false;
        break;
      }
    if (ok) return verts;
  } while (std::next_permutation(verts.begin(), verts.end()));
  return std::nullopt;
}

}  // namespace

PkOutcome factor_plus_pk(const Graph& g, const OracleLimits& lim) {
  int k = g.num_vertices() % 3;
  need(k == 1 || k == 2, "order must be 1 or 2 mod 3");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 2), "graph not 2-connected");

  PkOutcome out;
  Packing base = pack_two_connected(g);
  std::set<VertexId> left = g.vertex_set();
  for (VertexId v : base.covered()) left.erase(v);
  std::vector<VertexId> shortPath(left.begin(), left.end());
  if (k == 2 && !g.has_edge(shortPath[0], shortPath[1]))
    throw InternalCheckError("leftover pair not adjacent");
  out.short_path = {shortPath, base};

  // long path: leftover plus one packed triple, re-threaded into a path
  for (size_t t = 0; t < base.paths.size(); ++t) {
    std::vector<VertexId> verts = shortPath;
    verts.insert(verts.end(), base.paths[t].begin(), base.paths[t].end());
    auto hp = tiny_hamiltonian_path(g, verts);
    if (!hp) continue;
    Packing rest;
    for (size_t i = 0; i < base.paths.size(); ++i)
      if (i != t) rest.paths.push_back(base.paths[i]);
    out.long_path = {*hp, rest};
    out.ok = true;
    return out;
  }

  // exhaustive fallback: any (k+3)-path whose removal leaves a factor
  std::vector<VertexId> vs = g.vertices();
  std::function<bool(std::vector<VertexId>&)> extend = [&](std::vector<VertexId>& path) {
    if (static_cast<int>(path.size()) == k + 3) {
      std::set<VertexId> drop(path.begin(), path.end());
      auto f = clawfree_factor(g.delete_vertices(drop), lim);
      if (f) {
        out.long_path = {path, *f};
        return true;
      }
      return false;
    }
    for (VertexId w : g.neighbors(path.back())) {
      if (std::count(path.begin(), path.end(), w)) continue;
      path.push_back(w);
      if (extend(path)) return true;
      path.pop_back();
    }
    return false;
  };
  for (VertexId v : vs) {
    std::vector<VertexId> path{v};
    if (extend(path)) {
      out.ok = true;
      out.oracle_assisted = true;
      out.detail = "long path found by exhaustive search";
      return out;
    }
  }
  out.detail = "no long path with a factor complement found";
  return out;
}

std::vector<ClawRemoval> factor_minus_claw(const Graph& g, int want,
                                           const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 1, "order must be 1 mod 3");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 2), "graph not 2-connected");
  need(!g.is_cycle_graph(), "input is a cycle");

  std::vector<ClawRemoval> out;
  for (VertexId c : g.vertices()) {
    if (g.degree(c) < 3) continue;
    std::vector<VertexId> nb(g.neighbors(c).begin(), g.neighbors(c).end());
    for (size_t i = 0; i < nb.size() && static_cast<int>(out.size()) < want; ++i)
      for (size_t j = i + 1; j < nb.size() && static_cast<int>(out.size()) < want; ++j)
        for (size_t l = j + 1; l < nb.size() && static_cast<int>(out.size()) < want;
             ++l) {
          std::set<VertexId> drop{c, nb[i], nb[j], nb[l]};
          auto f = clawfree_factor(g.delete_vertices(drop), lim);
          if (f) out.push_back({c, {nb[i], nb[j], nb[l]}, *f});
        }
    if (static_cast<int>(out.size()) >= want) break;
  }
  return out;
}

FactorOutcome factor_minus_vertex(const Graph& g, VertexId x, const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 1, "order must be 1 mod 3");
  need(g.has_vertex(x), "vertex not in graph");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 2), "graph not 2-connected");
  Graph rest = g.delete_vertex(x);
  if (end_block_count(rest) <= 2) {
    Packing p = pack_chain(rest);
    if (auto err = validate_factor(rest, p)) throw InternalCheckError(*err);
    return success(p);
  }
  // should not happen in a claw-free graph; fall back to the full finder
  auto f = clawfree_factor(rest, lim);
  if (!f) return fail("vertex removal left no factor");
  return success(*f, true);
}

std::vector<EdgeRemoval> factor_minus_edge_pair(const Graph& g, VertexId x, int want,
                                                const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 2, "order must be 2 mod 3");
  need(g.has_vertex(x), "vertex not in graph");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 2), "graph not 2-connected");
  std::vector<EdgeRemoval> out;
  for (VertexId y : g.neighbors(x)) {
    if (static_cast<int>(out.size()) >= want) break;
    Graph rest = g.delete_vertices({x, y});
    if (!rest.is_connected()) continue;  // the theorem wants connected remainders
    auto f = clawfree_factor(rest, lim);
    if (f) out.push_back({Edge(x, y), *f});
  }
  return out;
}

FactorOutcome factor_minus_adjacent_pair(const Graph& g, Edge xy,
                                         const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 2, "order must be 2 mod 3");
  need(g.has_edge(xy), "edge not in graph");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 3), "graph not 3-connected");
  Graph rest = g.delete_vertices({xy.u, xy.v});
  auto f = clawfree_factor(rest, lim);
  if (!f) return fail("edge-pair removal left no factor");
  return success(*f);
}

FactorOutcome factor_containing_path(const Graph& g, const std::array<VertexId, 3>& L,
                                     const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 0, "order must be divisible by three");
  need(g.has_edge(L[0], L[1]) && g.has_edge(L[1], L[2]) && L[0] != L[2],
       "not a 3-vertex path");
  need(g.is_claw_free(), "graph not claw-free");
  Graph rest = g.delete_vertices({L[0], L[1], L[2]});
  if (rest.num_vertices() > 0 && !rest.is_connected())
    return fail("path removal disconnects the graph");
  auto f = clawfree_factor(rest, lim);
  if (!f) return fail("path removal left no factor");
  Packing p = *f;
  p.paths.push_back(L);
  if (auto err = validate_factor(g, p)) throw InternalCheckError(*err);
  return success(p);
}

FactorOutcome factor_containing_edge(const Graph& g, Edge e, const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 0, "order must be divisible by three");
  need(g.has_edge(e), "edge not in graph");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 3), "graph not 3-connected");
  // paths centered at either endpoint and containing e
  for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    for (VertexId z : g.neighbors(y)) {
      if (z == x) continue;
      auto r = factor_containing_path(g, {x, y, z}, lim);
      if (r.ok) return r;
    }
  }
  // certified fallback within the oracle cap
  if (g.num_vertices() <= lim.packing_cap) {
    PackingConstraint c;
    c.required_edge = e;
    auto [ok, w] = has_lambda_factor(g, c, lim);
    if (ok) return success(*w, true);
    return fail("no factor through the edge (oracle-verified)");
  }
  return fail("no factor through the edge found constructively");
}

FactorOutcome factor_minus_vertex_and_edge(const Graph& g, VertexId x, Edge e,
                                           const OracleLimits& lim) {
  need(g.num_vertices() % 3 == 1, "order must be 1 mod 3");
  need(g.has_vertex(x), "vertex not in graph");
  need(g.has_edge(e), "edge not in graph");
  need(g.is_claw_free(), "graph not claw-free");
  need(is_k_connected(g, 3), "graph not 3-connected");
  Graph rest = g.delete_vertex(x);
  if (!rest.has_edge(e)) {
    Packing p = pack_two_connected(rest);
    if (auto err = validate_factor(rest, p)) throw InternalCheckError(*err);
    return success(p);
  }
  return factor_avoiding_edge(rest, e, lim);
}

// ---------------------------------------------------------------------------
// triangle-replacement machinery

namespace {

// Perfect matching of a cubic multigraph, by edge index, containing all of
// `forced`.
std::optional<std::vector<int>> multigraph_perfect_matching(const CubicMultigraph& f,
                                                            const std::vector<int>& forced) {
  std::vector<int> matched(f.n, -1);
  std::vector<int> chosen;
  for (int e : forced) {
    auto [u, v] = f.edges[e];
    if (matched[u] != -1 || matched[v] != -1) return std::nullopt;
    matched[u] = e;
    matched[v] = e;
    chosen.push_back(e);
  }
  std::function<bool()> rec = [&]() {
    int u = -1;
    for (int v = 0; v < f.n; ++v)
      if (matched[v] == -1) {
        u = v;
        break;
      }
    if (u == -1) return true;
    for (int e : f.incident_edges(u)) {
      auto [a, b] = f.edges[e];
      int w = a == u ? b : a;
      if (matched[w] != -1) continue;
      matched[u] = e;
      matched[w] = e;
      chosen.push_back(e);
      if (rec()) return true;
      chosen.pop_back();
      matched[u] = -1;
      matched[w] = -1;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct TracedCycle {
  std::vector<int> verts;      // pre-image vertices in cyclic order
  std::vector<int> out_edges;  // out_edges[i] joins verts[i] to verts[i+1]
};

// Decompose a 2-regular edge subset into cycles. `first_out` optionally
// forces the traversal direction at a starting vertex.
std::vector<TracedCycle> trace_two_factor(const CubicMultigraph& f,
                                          const std::vector<int>& twoFactor,
                                          int startVertex = -1, int firstOut = -1) {
  std::vector<std::vector<int>> at(f.n);
  for (int e : twoFactor) {
    auto [u, v] = f.edges[e];
    at[u].push_back(e);
    at[v].push_back(e);
  }
  std::vector<char> usedEdge(f.edges.size(), 0);
  std::vector<TracedCycle> out;
  auto trace_from = [&](int v0, int e0) {
    TracedCycle c;
    int v = v0, e = e0;
    do {
      c.verts.push_back(v);
      c.out_edges.push_back(e);
      usedEdge[e] = 1;
      auto [a, b] = f.edges[e];
      v = a == v ? b : a;
      e = at[v][0] == e || usedEdge[at[v][0]] ? at[v][1] : at[v][0];
      if (v == v0) break;
      if (usedEdge[e] && e != e0) {
        // both incident edges used: the walk is closing on a 2-cycle
        break;
      }
    } while (true);
    out.push_back(std::move(c));
  };
  if (startVertex >= 0) trace_from(startVertex, firstOut);
  for (int v = 0; v < f.n; ++v)
    for (int e : at[v])
      if (!usedEdge[e]) trace_from(v, e);
  return out;
}

// Expand a traced pre-image cycle into the host cycle: each pre-image
// vertex contributes [entry, third, exit] of its triangle.
std::vector<VertexId> expand_cycle(const DeltaPreimage& pm, const TracedCycle& c) {
  std::vector<VertexId> host;
  int k = static_cast<int>(c.verts.size());
  for (int i = 0; i < k; ++i) {
    int v = c.verts[i];
    int inEdge = c.out_edges[(i + k - 1) % k];
    int outEdge = c.out_edges[i];
    const Edge& ein = pm.edge_of[inEdge];
    const Edge& eout = pm.edge_of[outEdge];
    VertexId entry = pm.triangle_of.at(ein.u) == v ? ein.u : ein.v;
    VertexId exit = pm.triangle_of.at(eout.u) == v ? eout.u : eout.v;
    VertexId third = -1;
    for (VertexId t : pm.triangles[v])
      if (t != entry && t != exit) third = t;
    host.push_back(entry);
    host.push_back(third);
    host.push_back(exit);
  }
  return host;
}

Packing triangles_as_paths(const DeltaPreimage& pm, const std::set<int>& skip,
                           const std::array<VertexId, 3>* oriented, int orientedTri) {
  Packing p;
  for (int i = 0; i < pm.f.n; ++i) {
    if (skip.count(i)) continue;
    if (oriented && i == orientedTri) {
      p.paths.push_back(*oriented);
    } else {
      const auto& t = pm.triangles[i];
      p.paths.push_back({t[0], t[1], t[2]});
    }
  }
  return p;
}

// Simple path between two pre-image vertices avoiding `banned`, as a vertex
// list; shortest first for a small non-spanning cycle.
std::optional<std::vector<int>> preimage_path(const CubicMultigraph& f, int from, int to,
                                              int banned) {
  std::vector<int> parent(f.n, -2);
  std::vector<int> parentEdge(f.n, -1);
  parent[from] = -1;
  std::vector<int> queue{from};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : f.incident_edges(v)) {
      auto [a, b] = f.edges[e];
      int w = a == v ? b : a;
      if (w == banned || parent[w] != -2) continue;
      parent[w] = v;
      parentEdge[w] = e;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

FactorOutcome delta_factor_through_path(const Graph& g, const std::array<VertexId, 3>& L,
                                        DeltaFactorMode mode, const OracleLimits& lim) {
  auto pm = delta_preimage(g);
  need(pm.has_value(), "not a triangle-replacement graph");
  need(g.has_edge(L[0], L[1]) && g.has_edge(L[1], L[2]) && L[0] != L[2],
       "not a 3-vertex path");

  VertexId x = L[0], z = L[1], z1 = L[2];
  int tz = pm->triangle_of.at(z);
  bool xin = pm->triangle_of.at(x) == tz;
  bool z1in = pm->triangle_of.at(z1) == tz;

  if (xin && z1in) {
    // the path induces its triangle
    if (mode == DeltaFactorMode::no_triangles || mode == DeltaFactorMode::mixed)
      return fail("path induces a triangle");
    Packing p = triangles_as_paths(*pm, {}, &L, tz);
    if (auto err = validate_factor(g, p)) throw InternalCheckError(*err);
    return success(p);
  }
  if (mode == DeltaFactorMode::all_triangles)
    return fail("path does not induce a triangle");

  if (!xin) {
    std::swap(x, z1);
    std::swap(xin, z1in);
  }
  need(xin, "path center's triangle contains neither end");
  // T = {x, z, s}; the cycle machinery runs through s's and z's outer edges
  VertexId s = -1;
  for (VertexId t : pm->triangles[tz])
    if (t != x && t != z) s = t;
  int earIn = -1, earOut = -1, earThird = -1;
  for (int e = 0; e < static_cast<int>(pm->edge_of.size()); ++e) {
    const Edge& he = pm->edge_of[e];
    if (he.touches(s)) earIn = e;
    if (he.touches(z)) earOut = e;
    if (he.touches(x)) earThird = e;
  }
  if (earIn < 0 || earOut < 0 || earThird < 0)
    throw InternalCheckError("triangle vertex without an outer edge");

  auto finish = [&](Packing p, bool oracle) -> FactorOutcome {
    bool hasL = false;
    for (auto& t : p.paths)
      if ((t == std::array<VertexId, 3>{L[0], L[1], L[2]}) ||
          (t == std::array<VertexId, 3>{L[2], L[1], L[0]}))
        hasL = true;
    if (!hasL) return fail("construction lost the required path");
    if (auto err = validate_factor(g, p)) throw InternalCheckError(*err);
    return success(std::move(p), oracle);
  };

  if (mode == DeltaFactorMode::any || mode == DeltaFactorMode::no_triangles) {
    need(is_k_connected(g, 2), "graph not 2-connected");
    // two-factor through both outer edges = perfect matching through the
    // third outer edge of the triangle
    auto matching = multigraph_perfect_matching(pm->f, {earThird});
    if (matching) {
      std::set<int> m(matching->begin(), matching->end());
      std::vector<int> twoFactor;
      for (int e = 0; e < static_cast<int>(pm->f.edges.size()); ++e)
        if (!m.count(e)) twoFactor.push_back(e);
      auto cycles = trace_two_factor(pm->f, twoFactor, tz, earOut);
      Packing p;
      for (const auto& c : cycles) p.append(split_cycle(expand_cycle(*pm, c), 1));
      auto r = finish(std::move(p), false);
      if (r.ok || mode == DeltaFactorMode::no_triangles) {
        if (mode == DeltaFactorMode::no_triangles && r.ok) {
          for (auto& t : r.packing.paths)
            if (g.has_edge(t[0], t[2]))
              throw InternalCheckError("no-triangle factor has a triangle component");
        }
        if (r.ok) return r;
      }
    } else if (mode == DeltaFactorMode::no_triangles) {
      return fail("pre-image has no two-factor through the path");
    }
  }

  if (mode == DeltaFactorMode::any || mode == DeltaFactorMode::mixed) {
    // short cycle through the two outer edges, triangles elsewhere
    int sFar = pm->triangle_of.at(pm->edge_of[earIn].other(s));
    int zFar = pm->triangle_of.at(pm->edge_of[earOut].other(z));
    std::optional<std::vector<int>> mid;
    if (sFar == zFar && sFar != tz) {
      mid = std::vector<int>{sFar};
    } else {
      mid = preimage_path(pm->f, zFar, sFar, tz);
    }
    if (mid && static_cast<int>(mid->size()) + 1 < pm->f.n) {
      // assemble the traced cycle tz -> zFar ... sFar -> tz
      TracedCycle c;
      c.verts.push_back(tz);
      c.out_edges.push_back(earOut);
      for (size_t i = 0; i < mid->size(); ++i) {
        c.verts.push_back((*mid)[i]);
        if (i + 1 < mid->size()) {
          // connecting edge between consecutive path vertices
          int eFound = -1;
          for (int e : pm->f.incident_edges((*mid)[i])) {
            auto [a, b] = pm->f.edges[e];
            int w = a == (*mid)[i] ? b : a;
            if (w == (*mid)[i + 1]) eFound = e;
          }
          c.out_edges.push_back(eFound);
        }
      }
      c.out_edges.push_back(earIn);
      std::set<int> onCycle(c.verts.begin(), c.verts.end());
      Packing p = split_cycle(expand_cycle(*pm, c), 1);
      p.append(triangles_as_paths(*pm, onCycle, nullptr, -1));
      auto r = finish(std::move(p), false);
      if (r.ok) {
        if (mode == DeltaFactorMode::mixed) {
          bool tri = false;
          for (auto& t : r.packing.paths)
            if (g.has_edge(t[0], t[2])) tri = true;
          if (!tri) return fail("mixed construction produced no triangle component");
        }
        return r;
      }
    } else if (mode == DeltaFactorMode::mixed) {
      return fail("no non-spanning pre-image cycle through the path");
    }
  }

  // `any` as a last resort: oracle within the cap
  if (mode == DeltaFactorMode::any && g.num_vertices() <= lim.packing_cap) {
    PackingConstraint c;
    c.required_path = L;
    auto [ok, w] = has_lambda_factor(g, c, lim);
    if (ok) return success(*w, true);
    return fail("no factor through the path (oracle-verified)");
  }
  return fail("no factor through the path found constructively");
}

DeltaThreeEdgeResult delta_three_edge_test(const Graph& g, const std::array<Edge, 3>& E) {
  auto pm = delta_preimage(g);
  need(pm.has_value(), "not a triangle-replacement graph");
  need(is_k_connected(g, 2), "graph not 2-connected");
  for (const Edge& e : E) need(g.has_edge(e), "edge not in graph");
  need(E[0] != E[1] && E[0] != E[2] && E[1] != E[2], "edges must be distinct");

  auto in_triangle = [&](const Edge& e) {
    return pm->triangle_of.at(e.u) == pm->triangle_of.at(e.v);
  };

  // component structure of the edge-induced subgraph
  Graph dot = g.edge_subgraph({E[0], E[1], E[2]});
  auto comps = dot.connected_components();

  DeltaThreeEdgeResult out;
  if (comps.size() == 1 && dot.num_vertices() == 4 && dot.max_degree() == 3) {
    out.obstruction = DeltaObstruction::claw;
    return out;
  }
  if (comps.size() == 1 && dot.num_vertices() == 3) {
    out.obstruction = DeltaObstruction::triangle;
    return out;
  }
  if (comps.size() == 2) {
    // split into the 2-edge and 1-edge components
    std::vector<Edge> e2;
    std::optional<Edge> e1;
    for (const auto& comp : comps) {
      std::vector<Edge> inside;
      for (const Edge& e : E)
        if (comp.count(e.u) && comp.count(e.v)) inside.push_back(e);
      if (inside.size() == 2) e2 = inside;
      if (inside.size() == 1) e1 = inside.front();
    }
    if (e2.size() == 2 && e1) {
      // shared vertex of the two-edge component
      VertexId m = e2[0].touches(e2[1].u) ? e2[1].u : e2[1].v;
      if (!e2[0].touches(m)) m = -1;
      if (m >= 0 && in_triangle(e2[0]) && in_triangle(e2[1])) {
        // both inside the same triangle T automatically (they share m)
        if (!in_triangle(*e1)) {
          if (!g.delete_edges({E[0], E[1], E[2]}).is_connected()) {
            out.obstruction = DeltaObstruction::split_disconnected;
            return out;
          }
        } else {
          // single edge inside a triangle D: cut test with the outer edges
          // at D's third vertex and at T's shared vertex
          VertexId d1 = -1;
          for (VertexId t : pm->triangles[pm->triangle_of.at(e1->u)])
            if (!e1->touches(t)) d1 = t;
          Edge d(0, 1), tEdge(0, 1);
          bool dFound = false, tFound = false;
          for (VertexId w : g.neighbors(d1))
            if (pm->triangle_of.at(w) != pm->triangle_of.at(d1)) {
              d = Edge(d1, w);
              dFound = true;
            }
          for (VertexId w : g.neighbors(m))
            if (pm->triangle_of.at(w) != pm->triangle_of.at(m)) {
              tEdge = Edge(m, w);
              tFound = true;
            }
          if (dFound && tFound) {
            Graph cut = g.delete_edges({d, tEdge});
            auto cc = cut.connected_components();
            if (cc.size() >= 2) {
              // different components for the two pieces?
              auto comp_of = [&](VertexId v) {
                for (size_t i = 0; i < cc.size(); ++i)
                  if (cc[i].count(v)) return static_cast<int>(i);
                return -1;
              };
              if (comp_of(e1->u) != comp_of(m)) {
                out.obstruction = DeltaObstruction::split_cut;
                return out;
              }
            }
          }
        }
      }
    }
  }
  out.has_factor = true;
  return out;
}

FactorOutcome delta_two_edge_factor(const Graph& g, const std::array<Edge, 2>& E,
                                    const OracleLimits& lim) {
  auto pm = delta_preimage(g);
  need(pm.has_value(), "not a triangle-replacement graph");
  need(g.is_connected(), "graph not connected");
  need(g.has_edge(E[0]) && g.has_edge(E[1]), "edge not in graph");
  need(E[0] != E[1], "edges must be distinct");

  auto tri_of_edge = [&](const Edge& e) -> int {
    int tu = pm->triangle_of.at(e.u), tv = pm->triangle_of.at(e.v);
    return tu == tv ? tu : -1;
  };
  int t0 = tri_of_edge(E[0]), t1 = tri_of_edge(E[1]);

  auto check = [&](Packing p, bool oracle) -> FactorOutcome {
    if (uses_edge(p, E[0]) || uses_edge(p, E[1]))
      throw InternalCheckError("two-edge factor uses a removed edge");
    if (auto err = validate_factor(g, p)) throw InternalCheckError(*err);
    return success(std::move(p), oracle);
  };

  if (t0 != t1 || t0 == -1 || t1 == -1) {
    // at most one removed edge per triangle: orient each triangle's path
    // away from its forbidden edge
    Packing p;
    for (int i = 0; i < pm->f.n; ++i) {
      const auto& t = pm->triangles[i];
      std::array<VertexId, 3> path{t[0], t[1], t[2]};
      for (const Edge& e : {E[0], E[1]}) {
        if (tri_of_edge(e) != i) continue;
        // middle vertex must be the one off the forbidden edge
        for (VertexId mid : t)
          if (!e.touches(mid)) {
            std::array<VertexId, 3> rest{};
            int k = 0;
            for (VertexId v : t)
              if (v != mid) rest[k++] = v;
            path = {rest[0], mid, rest[1]};
          }
      }
      p.paths.push_back(path);
    }
    return check(std::move(p), false);
  }

  // both edges in one triangle T = {a, b, c}; the only usable T-edge is the
  // third one, and the factor is rerouted through it
  const auto& t = pm->triangles[t0];
  Edge third(0, 1);
  for (VertexId u : t)
    for (VertexId v : t)
      if (u < v && Edge(u, v) != E[0] && Edge(u, v) != E[1]) third = Edge(u, v);
  if (is_k_connected(g, 2)) {
    for (auto [p, q] : {std::pair{third.u, third.v}, std::pair{third.v, third.u}}) {
      // path (outer neighbor of p) - p - q
      VertexId xOuter = -1;
      for (VertexId w : g.neighbors(p))
        if (pm->triangle_of.at(w) != t0) xOuter = w;
      if (xOuter < 0) continue;
      auto r = delta_factor_through_path(g, {xOuter, p, q}, DeltaFactorMode::any, lim);
      if (r.ok) return check(std::move(r.packing), r.oracle_assisted);
    }
  }
  if (g.num_vertices() <= lim.packing_cap) {
    PackingConstraint c;
    c.forbidden_edges = {E[0], E[1]};
    auto [ok, w] = has_lambda_factor(g, c, lim);
    if (ok) return check(*w, true);
    return fail("no factor avoiding both edges (oracle-verified)");
  }
  return fail("no factor avoiding both edges found constructively");
}

}  // namespace p3pack
