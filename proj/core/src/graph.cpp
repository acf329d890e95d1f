#include "p3pack/graph.hpp"

#include <algorithm>
#include <queue>

namespace p3pack {

Graph Graph::with_vertices(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  return g;
}

Graph Graph::complete(int n) {
  Graph g = with_vertices(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = with_vertices(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g = with_vertices(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::net() {
  Graph g = with_vertices(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

VertexId Graph::add_vertex() {
  VertexId v = next_label_;
  add_vertex(v);
  return v;
}

void Graph::add_vertex(VertexId v) {
  if (v < 0) throw std::invalid_argument("vertex labels are non-negative");
  if (adj_.count(v)) throw std::invalid_argument("vertex already present");
  adj_[v];
  next_label_ = std::max(next_label_, v + 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("loop edge");
  auto iu = adj_.find(u), iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end())
    throw std::invalid_argument("vertex not in graph");
  if (iu->second.count(v)) throw std::invalid_argument("parallel edge");
  iu->second.insert(v);
  iv->second.insert(u);
  ++num_edges_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("vertex not in graph");
  return it->second;
}

int Graph::min_degree() const {
  int d = num_vertices() ? num_vertices() : 0;
  for (const auto& [v, nb] : adj_) d = std::min(d, static_cast<int>(nb.size()));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& [v, nb] : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

bool Graph::is_regular(int d) const {
  for (const auto& [v, nb] : adj_)
    if (static_cast<int>(nb.size()) != d) return false;
  return true;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, nb] : adj_) out.push_back(v);
  return out;
}

std::set<VertexId> Graph::vertex_set() const {
  std::set<VertexId> out;
  for (const auto& [v, nb] : adj_) out.insert(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [v, nb] : adj_)
    for (VertexId w : nb)
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph Graph::delete_vertices(const std::set<VertexId>& s) const {
  for (VertexId v : s)
    if (!has_vertex(v)) throw std::invalid_argument("vertex not in graph");
  Graph out;
  out.next_label_ = next_label_;
  for (const auto& [v, nb] : adj_) {
    if (s.count(v)) continue;
    auto& dst = out.adj_[v];
    for (VertexId w : nb)
      if (!s.count(w)) dst.insert(w);
  }
  for (const auto& [v, nb] : out.adj_) out.num_edges_ += static_cast<int>(nb.size());
  out.num_edges_ /= 2;
  return out;
}

Graph Graph::delete_edges(const std::vector<Edge>& es) const {
  Graph out = *this;
  for (const Edge& e : es) {
    if (!out.has_edge(e)) throw std::invalid_argument("edge not in graph");
    out.adj_[e.u].erase(e.v);
    out.adj_[e.v].erase(e.u);
    --out.num_edges_;
  }
  return out;
}

Graph Graph::induced(const std::set<VertexId>& s) const {
  std::set<VertexId> drop;
  for (const auto& [v, nb] : adj_)
    if (!s.count(v)) drop.insert(v);
  for (VertexId v : s)
    if (!has_vertex(v)) throw std::invalid_argument("vertex not in graph");
  return delete_vertices(drop);
}

Graph Graph::edge_subgraph(const std::vector<Edge>& es) const {
  Graph out;
  out.next_label_ = next_label_;
  for (const Edge& e : es) {
    if (!has_edge(e)) throw std::invalid_argument("edge not in graph");
    if (!out.has_vertex(e.u)) out.add_vertex(e.u);
    if (!out.has_vertex(e.v)) out.add_vertex(e.v);
    if (!out.has_edge(e)) out.add_edge(e);
  }
  out.next_label_ = next_label_;
  return out;
}

Graph Graph::union_with(const Graph& other) const {
  Graph out = *this;
  for (VertexId v : other.vertices())
    if (!out.has_vertex(v)) out.add_vertex(v);
  for (const Edge& e : other.edges())
    if (!out.has_edge(e)) out.add_edge(e);
  out.next_label_ = std::max(next_label_, other.next_label_);
  return out;
}

std::vector<std::set<VertexId>> Graph::connected_components() const {
  std::vector<std::set<VertexId>> comps;
  std::set<VertexId> seen;
  for (const auto& [start, nb0] : adj_) {
    if (seen.count(start)) continue;
    std::set<VertexId> comp;
    std::queue<VertexId> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.insert(v);
      for (VertexId w : adj_.at(v))
        if (seen.insert(w).second) q.push(w);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  return connected_components().size() <= 1;
}

std::set<VertexId> Graph::leaves() const {
  std::set<VertexId> out;
  for (const auto& [v, nb] : adj_)
    if (nb.size() == 1) out.insert(v);
  return out;
}

bool Graph::is_cycle_graph() const {
  return num_vertices() >= 3 && is_regular(2) && is_connected();
}

bool Graph::is_tree() const {
  return is_connected() && num_edges() == num_vertices() - 1;
}

std::optional<ClawWitness> Graph::find_claw() const {
  for (const auto& [c, nb] : adj_) {
    if (nb.size() < 3) continue;
    std::vector<VertexId> n(nb.begin(), nb.end());
    for (size_t i = 0; i < n.size(); ++i)
      for (size_t j = i + 1; j < n.size(); ++j) {
        if (has_edge(n[i], n[j])) continue;
        for (size_t k = j + 1; k < n.size(); ++k) {
          if (has_edge(n[i], n[k]) || has_edge(n[j], n[k])) continue;
          return ClawWitness{c, {n[i], n[j], n[k]}};
        }
      }
  }
  return std::nullopt;
}

std::pair<Graph, std::map<Edge, VertexId>> Graph::line_graph() const {
  std::map<Edge, VertexId> id;
  Graph lg;
  for (const Edge& e : edges()) id[e] = lg.add_vertex();
  for (const auto& [v, nb] : adj_) {
    std::vector<VertexId> inc(nb.begin(), nb.end());
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j) {
        VertexId a = id[Edge(v, inc[i])];
        VertexId b = id[Edge(v, inc[j])];
        if (!lg.has_edge(a, b)) lg.add_edge(a, b);
      }
  }
  return {lg, id};
}

std::vector<std::array<VertexId, 3>> Graph::triangles() const {
  std::vector<std::array<VertexId, 3>> out;
  for (const auto& [a, nb] : adj_)
    for (VertexId b : nb) {
      if (b <= a) continue;
      for (VertexId c : neighbors(b)) {
        if (c <= b) continue;
        if (nb.count(c)) out.push_back({a, b, c});
      }
    }
  return out;
}

std::vector<VertexId> Graph::common_neighbors(VertexId u, VertexId v) const {
  std::vector<VertexId> out;
  std::set_intersection(neighbors(u).begin(), neighbors(u).end(),
                        neighbors(v).begin(), neighbors(v).end(),
                        std::back_inserter(out));
  return out;
}

void Graph::check_consistent() const {
  int twice = 0;
  for (const auto& [v, nb] : adj_) {
    if (nb.count(v)) throw std::logic_error("self-adjacency");
    for (VertexId w : nb) {
      auto it = adj_.find(w);
      if (it == adj_.end() || !it->second.count(v))
        throw std::logic_error("asymmetric adjacency");
    }
    twice += static_cast<int>(nb.size());
  }
  if (twice != 2 * num_edges_) throw std::logic_error("edge count mismatch");
}

namespace {

bool connected_after_removal(const Graph& g, const std::set<VertexId>& cut) {
  if (g.num_vertices() - static_cast<int>(cut.size()) <= 0) return false;
  return g.delete_vertices(cut).is_connected();
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  int n = g.num_vertices();
  if (n <= k) return false;
  if (!g.is_connected()) return k <= 0;
  if (k <= 1) return true;
  // Every (k-1)-subset of vertices must leave a connected graph.
  std::vector<VertexId> vs = g.vertices();
  std::vector<int> pick(k - 1, 0);
  // enumerate combinations of size k-1
  std::vector<int> idx(k - 1);
  for (int i = 0; i < k - 1; ++i) idx[i] = i;
  if (static_cast<int>(vs.size()) < k - 1) return true;
  while (true) {
    std::set<VertexId> cut;
    for (int i : idx) cut.insert(vs[i]);
    if (!connected_after_removal(g, cut)) return false;
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == static_cast<int>(vs.size()) - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (!g.is_connected() || g.num_vertices() < 2) return false;
  if (k <= 1) return true;
  std::vector<Edge> es = g.edges();
  // remove every subset of size k-1 (k is small: 2 or 3 in practice)
  int m = static_cast<int>(es.size());
  if (k - 1 > m) return false;
  std::vector<int> idx(k - 1);
  for (int i = 0; i < k - 1; ++i) idx[i] = i;
  while (true) {
    std::vector<Edge> cut;
    for (int i : idx) cut.push_back(es[i]);
    if (!g.delete_edges(cut).is_connected()) return false;
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == m - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

IndexMap::IndexMap(const Graph& g) {
  for (VertexId v : g.vertices()) {
    index[v] = static_cast<int>(label.size());
    label.push_back(v);
  }
}

}  // namespace p3pack
