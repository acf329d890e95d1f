#include "p3pack/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "p3pack/decomposition.hpp"

namespace p3pack {

bool CubicMultigraph::is_cubic() const {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) return false;
    ++deg[u];
    ++deg[v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
}

bool CubicMultigraph::is_connected() const {
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == n;
}

namespace {

bool multi_connected_without(const CubicMultigraph& f, const std::vector<int>& drop) {
  std::vector<char> dead(f.n, 0);
  for (int v : drop) dead[v] = 1;
  int start = -1, alive = 0;
  for (int v = 0; v < f.n; ++v)
    if (!dead[v]) {
      if (start < 0) start = v;
      ++alive;
    }
  if (alive == 0) return false;
  std::vector<std::vector<int>> adj(f.n);
  for (auto [u, v] : f.edges) {
    if (dead[u] || dead[v]) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(f.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == alive;
}

}  // namespace

int CubicMultigraph::connectivity() const {
  if (!is_connected()) return 0;
  if (n == 1) return 3;
  if (n == 2) return std::min(3, static_cast<int>(edges.size()));
  for (int v = 0; v < n; ++v)
    if (!multi_connected_without(*this, {v})) return 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!multi_connected_without(*this, {u, v})) return 2;
  return 3;
}

std::vector<int> CubicMultigraph::incident_edges(int v) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].first == v || edges[i].second == v) out.push_back(i);
  return out;
}

Graph gen_delta(const CubicMultigraph& f) {
  if (!f.is_cubic()) throw std::invalid_argument("pre-image not cubic");
  Graph g = Graph::with_vertices(3 * f.n);
  for (int v = 0; v < f.n; ++v) {
    g.add_edge(3 * v, 3 * v + 1);
    g.add_edge(3 * v, 3 * v + 2);
    g.add_edge(3 * v + 1, 3 * v + 2);
  }
  // slot k of vertex v hosts v's k-th incident edge
  std::vector<int> used(f.n, 0);
  for (auto [u, v] : f.edges) {
    int a = 3 * u + used[u]++;
    int b = 3 * v + used[v]++;
    g.add_edge(a, b);
  }
  return g;
}

bool is_delta_graph(const Graph& g) {
  if (g.num_vertices() == 0 || !g.is_regular(3)) return false;
  std::map<VertexId, int> count;
  for (const auto& t : g.triangles())
    for (VertexId v : t) ++count[v];
  for (VertexId v : g.vertices())
    if (count[v] != 1) return false;
  return true;
}

std::optional<DeltaPreimage> delta_preimage(const Graph& g) {
  if (!is_delta_graph(g)) return std::nullopt;
  DeltaPreimage out;
  out.triangles = g.triangles();
  out.f.n = static_cast<int>(out.triangles.size());
  for (int i = 0; i < out.f.n; ++i)
    for (VertexId v : out.triangles[i]) out.triangle_of[v] = i;
  std::set<Edge> triangleEdges;
  for (const auto& t : out.triangles) {
    triangleEdges.insert(Edge(t[0], t[1]));
    triangleEdges.insert(Edge(t[0], t[2]));
    triangleEdges.insert(Edge(t[1], t[2]));
  }
  for (const Edge& e : g.edges()) {
    if (triangleEdges.count(e)) continue;
    out.f.edges.emplace_back(out.triangle_of.at(e.u), out.triangle_of.at(e.v));
    out.edge_of.push_back(e);
  }
  if (!out.f.is_cubic()) return std::nullopt;
  return out;
}

std::optional<std::string> validate_family_s(const Graph& g) {
  if (g.num_vertices() == 0 || !g.is_connected()) return "not connected";
  if (g.max_degree() > 3) return "vertex of degree greater than three";
  std::map<VertexId, int> count;
  for (const auto& t : g.triangles())
    for (VertexId v : t) ++count[v];
  for (VertexId v : g.vertices()) {
    int d = g.degree(v);
    if ((d == 2 || d == 3) && count[v] != 1) {
      std::ostringstream os;
      os << "vertex " << v << " of degree " << d << " lies in " << count[v]
         << " triangles (needs exactly one)";
      return os.str();
    }
  }
  if (g.leaves().size() < 3) return "fewer than three leaves";
  return std::nullopt;
}

Graph gen_family_s(const Graph& skeleton) {
  if (!skeleton.is_tree() || skeleton.num_vertices() < 2)
    throw std::invalid_argument("skeleton must be a tree");
  Graph out;
  std::map<VertexId, std::vector<VertexId>> ports;
  for (VertexId v : skeleton.vertices()) {
    int d = skeleton.degree(v);
    if (d == 1) {
      ports[v] = {out.add_vertex()};
    } else {
      if (d > 3)
        throw std::invalid_argument("internal skeleton node of degree greater than three");
      VertexId a = out.add_vertex();
      VertexId b = out.add_vertex();
      VertexId c = out.add_vertex();
      out.add_edge(a, b);
      out.add_edge(b, c);
      out.add_edge(a, c);
      ports[v] = {a, b, c};
    }
  }
  std::map<VertexId, int> next_port;
  for (const Edge& e : skeleton.edges()) {
    VertexId pu = ports[e.u][next_port[e.u]++];
    VertexId pv = ports[e.v][next_port[e.v]++];
    out.add_edge(pu, pv);
  }
  if (auto err = validate_family_s(out))
    throw std::invalid_argument("family-S recipe: " + *err);
  return out;
}

Graph gen_family_s_random(int internal_nodes, std::uint64_t seed) {
  if (internal_nodes < 1) throw std::invalid_argument("need at least one internal node");
  std::mt19937_64 rng(seed);
  while (true) {
    Graph sk = Graph::with_vertices(internal_nodes);
    std::vector<int> deg(internal_nodes, 0);
    bool ok = true;
    for (int v = 1; v < internal_nodes; ++v) {
      std::vector<int> cands;
      for (int u = 0; u < v; ++u)
        if (deg[u] < 3) cands.push_back(u);
      if (cands.empty()) {
        ok = false;
        break;
      }
      int u = cands[rng() % cands.size()];
      sk.add_edge(u, v);
      ++deg[u];
      ++deg[v];
    }
    if (!ok) continue;
    int next = internal_nodes;
    for (int v = 0; v < internal_nodes; ++v)
      while (deg[v] < 3) {
        if (deg[v] >= 1 && rng() % 3 == 0) break;
        sk.add_vertex(next);
        sk.add_edge(v, next);
        ++next;
        ++deg[v];
      }
    if (sk.leaves().size() < 3) continue;
    if (internal_nodes == 1 && sk.num_vertices() < 4) continue;
    return gen_family_s(sk);
  }
}

ConstructionR gen_construction_r(int na, int nb) {
  if (na < 3 || nb < 3) throw std::invalid_argument("cycle sizes must be at least 3");
  Graph g = Graph::with_vertices(na + nb + 1);
  for (int i = 0; i < na; ++i) g.add_edge(i, (i + 1) % na);
  for (int i = 0; i < nb; ++i) g.add_edge(na + i, na + (i + 1) % nb);
  VertexId z = na + nb;
  g.add_edge(0, z);
  g.add_edge(1, z);
  g.add_edge(na, z);
  g.add_edge(na + 1, z);
  return {g, Edge(0, 1), Edge(na, na + 1)};
}

ConstructionQ gen_construction_q(int na, int nb) {
  if (na < 3 || nb < 3) throw std::invalid_argument("cycle sizes must be at least 3");
  Graph g = Graph::with_vertices(na + nb + 2);
  for (int i = 0; i < na; ++i) g.add_edge(i, (i + 1) % na);
  for (int i = 0; i < nb; ++i) g.add_edge(na + i, na + (i + 1) % nb);
  VertexId z1 = na + nb, z2 = na + nb + 1;
  g.add_edge(z1, z2);
  for (VertexId z : {z1, z2}) {
    g.add_edge(0, z);
    g.add_edge(1, z);
    g.add_edge(na, z);
    g.add_edge(na + 1, z);
  }
  return {g, Edge(z1, z2)};
}

ConstructionH gen_construction_h() {
  Graph h = Graph::net();
  for (int t = 6; t <= 8; ++t) h.add_vertex(t);
  h.add_edge(6, 7);
  h.add_edge(7, 8);
  h.add_edge(6, 8);
  // net leaves are 3,4,5; each joins the two triangle vertices of the
  // other two indices
  h.add_edge(3, 7);
  h.add_edge(3, 8);
  h.add_edge(4, 6);
  h.add_edge(4, 8);
  h.add_edge(5, 6);
  h.add_edge(5, 7);
  return {h, {6, 7, 8}};
}

CubicMultigraph gen_random_cubic_multigraph(int n, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("cubic graphs need an even order of at least 2");
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    CubicMultigraph f;
    f.n = n;
    bool loop = false;
    for (size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        loop = true;
        break;
      }
      f.edges.emplace_back(std::min(stubs[i], stubs[i + 1]),
                           std::max(stubs[i], stubs[i + 1]));
    }
    if (loop) continue;
    std::sort(f.edges.begin(), f.edges.end());
    return f;
  }
}

Graph gen_random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("simple cubic graphs need even order >= 4");
  std::mt19937_64 rng(seed);
  std::uint64_t sub = rng();
  while (true) {
    CubicMultigraph f = gen_random_cubic_multigraph(n, sub++);
    std::set<std::pair<int, int>> distinct(f.edges.begin(), f.edges.end());
    if (distinct.size() != f.edges.size()) continue;
    Graph g = Graph::with_vertices(n);
    for (auto [u, v] : f.edges) g.add_edge(u, v);
    return g;
  }
}

CubicMultigraph gen_random_cubic_multigraph_connected(int n, std::uint64_t seed,
                                                      int connectivity, int tries) {
  std::mt19937_64 rng(seed);
  std::uint64_t sub = rng();
  for (int t = 0; t < tries; ++t) {
    CubicMultigraph f = gen_random_cubic_multigraph(n, sub++);
    if (f.connectivity() >= connectivity) return f;
  }
  throw std::runtime_error("connectivity filter exhausted its retry budget");
}

namespace {

Graph random_connected_with_edges(std::mt19937_64& rng, int vertices, int edges) {
  Graph g = Graph::with_vertices(vertices);
  std::vector<int> order(vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < vertices; ++i)
    g.add_edge(order[i], order[rng() % i]);
  std::vector<Edge> missing;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j)
      if (!g.has_edge(i, j)) missing.emplace_back(i, j);
  std::shuffle(missing.begin(), missing.end(), rng);
  for (const Edge& e : missing) {
    if (g.num_edges() >= edges) break;
    g.add_edge(e);
  }
  return g;
}

Graph clawfree_linegraph_method(std::mt19937_64& rng, int n) {
  // L(H) has n vertices iff H has n edges
  while (true) {
    int minV = 3;
    while (minV * (minV - 1) / 2 < n) ++minV;
    int span = std::max(1, n / 2);
    int h = minV + static_cast<int>(rng() % static_cast<unsigned>(span));
    if (h - 1 > n) h = n + 1;
    Graph base = random_connected_with_edges(rng, h, n);
    if (base.num_edges() != n) continue;
    auto [lg, mapping] = base.line_graph();
    if (lg.num_vertices() == n && lg.is_connected()) return lg;
  }
}

Graph clawfree_local_complete_method(std::mt19937_64& rng, int n) {
  // circular-interval construction: vertices on a circle, adjacency by
  // co-membership in random short arcs; always claw-free
  while (true) {
    Graph g = Graph::with_vertices(n);
    int arcs = n / 2 + 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    for (int a = 0; a < arcs; ++a) {
      int start = static_cast<int>(rng() % static_cast<unsigned>(n));
      int len = 1 + static_cast<int>(rng() % 3);
      len = std::min(len, n - 1);
      for (int i = 0; i <= len; ++i)
        for (int j = i + 1; j <= len; ++j) {
          VertexId u = (start + i) % n, v = (start + j) % n;
          if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
    }
    if (!g.is_connected() || !g.is_claw_free()) continue;
    return g;
  }
}

}  // namespace

Graph gen_random_clawfree(int n, std::uint64_t seed, ClawFreeMethod method) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::mt19937_64 rng(seed);
  if (n <= 2) return Graph::path(n);
  return method == ClawFreeMethod::linegraph ? clawfree_linegraph_method(rng, n)
                                             : clawfree_local_complete_method(rng, n);
}

Graph gen_random_clawfree_2connected(int n, std::uint64_t seed, ClawFreeMethod method,
                                     int tries) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    Graph g = gen_random_clawfree(n, rng(), method);
    if (is_k_connected(g, 2)) return g;
  }
  throw std::runtime_error("connectivity filter exhausted its retry budget");
}

Graph gen_cactus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    Graph g;
    if (rng() % 2 == 0) {
      // clique core with pendant leaves
      int q = 3 + static_cast<int>(rng() % 6);
      int p = 3 + static_cast<int>(rng() % 4);
      p = std::min(p, q);
      g = Graph::complete(q);
      for (int i = 0; i < p; ++i) {
        VertexId leaf = g.add_vertex();
        g.add_edge(i, leaf);
      }
    } else {
      // chain of triangles joined by bridges, pendants on free corners
      int t = 1 + static_cast<int>(rng() % 4);
      g = Graph::complete(3);
      for (int i = 1; i < t; ++i) {
        VertexId a = g.add_vertex();
        VertexId b = g.add_vertex();
        VertexId c = g.add_vertex();
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(a, c);
        g.add_edge(3 * (i - 1) + 1, a);
      }
      int added = 0;
      for (VertexId v : g.vertex_set()) {
        if (g.degree(v) != 2) continue;
        if (added < 3 || rng() % 2 == 0) {
          VertexId leaf = g.add_vertex();
          g.add_edge(v, leaf);
          ++added;
        }
      }
      if (added < 3) continue;
    }
    if (g.is_claw_free() && is_cactus(g)) return g;
  }
}

Graph gen_cycle(int n) { return Graph::cycle(n); }
Graph gen_net() { return Graph::net(); }

Graph gen_prism() {
  CubicMultigraph banana;
  banana.n = 2;
  banana.edges = {{0, 1}, {0, 1}, {0, 1}};
  return gen_delta(banana);
}

Graph disjoint_k4s(int k) {
  if (k < 1) throw std::invalid_argument("need at least one block");
  Graph g;
  for (int b = 0; b < k; ++b) {
    VertexId base = 4 * b;
    for (int i = 0; i < 4; ++i) g.add_vertex(base + i);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(base + i, base + j);
  }
  return g;
}

namespace {

long param_or(const std::map<std::string, long>& params, const std::string& key,
              long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

std::vector<GeneratedInstance> generate_family(const std::string& family,
                                               const std::map<std::string, long>& params,
                                               std::uint64_t seed, int count) {
  std::vector<GeneratedInstance> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::uint64_t sub = rng();
    GeneratedInstance inst;
    inst.family = family;
    inst.params = params;
    inst.seed = sub;
    if (family == "net") {
      inst.graph = gen_net();
    } else if (family == "cycle") {
      inst.graph = gen_cycle(static_cast<int>(param_or(params, "n", 9)));
    } else if (family == "prism") {
      inst.graph = gen_prism();
    } else if (family == "delta") {
      int n = static_cast<int>(param_or(params, "n", 4));
      int k = static_cast<int>(param_or(params, "connectivity", 2));
      inst.graph = gen_delta(gen_random_cubic_multigraph_connected(n, sub, k));
    } else if (family == "familyS") {
      inst.graph =
          gen_family_s_random(static_cast<int>(param_or(params, "internal", 3)), sub);
    } else if (family == "cactus") {
      inst.graph = gen_cactus(sub);
    } else if (family == "constructionR") {
      auto r = gen_construction_r(static_cast<int>(param_or(params, "na", 4)),
                                  static_cast<int>(param_or(params, "nb", 4)));
      inst.graph = r.graph;
      inst.distinguished["a"] = {r.a.u, r.a.v};
      inst.distinguished["b"] = {r.b.u, r.b.v};
    } else if (family == "constructionQ") {
      auto q = gen_construction_q(static_cast<int>(param_or(params, "na", 5)),
                                  static_cast<int>(param_or(params, "nb", 5)));
      inst.graph = q.graph;
      inst.distinguished["e"] = {q.e.u, q.e.v};
    } else if (family == "constructionH") {
      auto h = gen_construction_h();
      inst.graph = h.graph;
      inst.distinguished["triangle"] = {h.triangle[0], h.triangle[1], h.triangle[2]};
    } else if (family == "cubicRandom") {
      inst.graph = gen_random_cubic(static_cast<int>(param_or(params, "n", 12)), sub);
    } else if (family == "clawfreeRandom") {
      int n = static_cast<int>(param_or(params, "n", 12));
      ClawFreeMethod m = param_or(params, "localcomplete", 0)
                             ? ClawFreeMethod::local_complete
                             : ClawFreeMethod::linegraph;
      if (param_or(params, "twoconnected", 0))
        inst.graph = gen_random_clawfree_2connected(n, sub, m);
      else
        inst.graph = gen_random_clawfree(n, sub, m);
    } else {
      throw std::invalid_argument("unknown family: " + family);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace p3pack
