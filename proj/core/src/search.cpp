#include "p3pack/search.hpp"

#include <algorithm>

namespace p3pack {

namespace {

struct CycleSearch {
  const Graph& g;
  IndexMap im;
  std::vector<std::vector<int>> adj;
  int n;
  std::vector<char> onPath;
  std::vector<int> path;
  std::vector<int> best;
  int required = -1;  // index that must lie on the cycle, or -1

  explicit CycleSearch(const Graph& graph) : g(graph), im(graph) {
    n = im.size();
    adj.resize(n);
    for (int i = 0; i < n; ++i)
      for (VertexId w : g.neighbors(im.label[i])) adj[i].push_back(im.index.at(w));
    onPath.assign(n, 0);
  }

  // Vertices (other than start) reachable from `from` avoiding the current
  // path; used both as an upper bound and as a closability test.
  int reachable_free(int from, int start, bool& startReachable, bool& requiredOk) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    int count = 0;
    startReachable = false;
    requiredOk = required < 0 || onPath[required];
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (w == start) startReachable = true;
        if (seen[w] || onPath[w]) continue;
        seen[w] = 1;
        if (w == required) requiredOk = true;
        ++count;
        stack.push_back(w);
      }
    }
    return count;
  }

  void dfs(int start, int v, bool restrictAbove) {
    if (static_cast<int>(best.size()) == n) return;  // Hamiltonian: done
    for (int w : adj[v]) {
      if (static_cast<int>(best.size()) == n) return;
      if (w == start && path.size() >= 3 &&
          (required < 0 || onPath[required]) &&
          path.size() > best.size()) {
        best = path;
      }
      if (onPath[w] || w == start) continue;
      if (restrictAbove && w < start) continue;
      onPath[w] = 1;
      path.push_back(w);
      bool startReachable, requiredOk;
      int free = reachable_free(w, start, startReachable, requiredOk);
      bool hasDirect = g.has_edge(im.label[w], im.label[start]);
      if ((startReachable || hasDirect) && requiredOk &&
          static_cast<int>(path.size()) + free > static_cast<int>(best.size()))
        dfs(start, w, restrictAbove);
      path.pop_back();
      onPath[w] = 0;
    }
  }

  std::vector<VertexId> run_all() {
    for (int s = 0; s < n && static_cast<int>(best.size()) < n; ++s) {
      // only cycles whose minimum vertex is s
      if (static_cast<int>(best.size()) >= n - s) break;
      onPath.assign(n, 0);
      onPath[s] = 1;
      path = {s};
      dfs(s, s, /*restrictAbove=*/true);
    }
    return labels(best);
  }

  std::vector<VertexId> run_through(int x, int y) {
    required = y;
    onPath.assign(n, 0);
    onPath[x] = 1;
    path = {x};
    dfs(x, x, /*restrictAbove=*/false);
    return labels(best);
  }

  std::vector<VertexId> labels(const std::vector<int>& idx) const {
    std::vector<VertexId> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(im.label[i]);
    return out;
  }
};

}  // namespace

std::vector<VertexId> longest_cycle(const Graph& g) {
  if (g.num_vertices() < 3) return {};
  CycleSearch cs(g);
  return cs.run_all();
}

std::vector<VertexId> longest_cycle_through(const Graph& g, VertexId x, VertexId y) {
  if (g.num_vertices() < 3) return {};
  if (!g.has_vertex(x) || !g.has_vertex(y))
    throw std::invalid_argument("vertex not in graph");
  CycleSearch cs(g);
  return cs.run_through(cs.im.index.at(x), cs.im.index.at(y));
}

std::optional<std::vector<VertexId>> hamiltonian_cycle(const Graph& g) {
  std::vector<VertexId> c = longest_cycle(g);
  if (static_cast<int>(c.size()) == g.num_vertices() && !c.empty()) return c;
  return std::nullopt;
}

namespace {

struct EarSearch {
  const Graph& g;
  IndexMap im;
  std::vector<std::vector<int>> adj;
  std::vector<char> inBase, onPath;
  int n;
  std::vector<int> path, best;

  EarSearch(const Graph& graph, const std::set<VertexId>& base) : g(graph), im(graph) {
    n = im.size();
    adj.resize(n);
    for (int i = 0; i < n; ++i)
      for (VertexId w : g.neighbors(im.label[i])) adj[i].push_back(im.index.at(w));
    inBase.assign(n, 0);
    for (VertexId v : base) {
      auto it = im.index.find(v);
      if (it == im.index.end()) throw std::invalid_argument("base vertex not in graph");
      inBase[it->second] = 1;
    }
    onPath.assign(n, 0);
  }

  int free_count() const {
    int outside = 0;
    for (int i = 0; i < n; ++i)
      if (!inBase[i] && !onPath[i]) ++outside;
    return outside;
  }

  void dfs(int v) {
    for (int w : adj[v]) {
      if (inBase[w]) {
        // closing the ear: needs >= 1 interior vertex and distinct endpoints
        if (path.size() >= 2 && w != path.front() && path.size() + 1 > best.size()) {
          best = path;
          best.push_back(w);
        }
        continue;
      }
      if (onPath[w]) continue;
      if (static_cast<int>(path.size()) + 1 + free_count() + 1 <=
          static_cast<int>(best.size()))
        continue;
      onPath[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      onPath[w] = 0;
    }
  }

  std::optional<std::vector<VertexId>> run() {
    int outside = free_count();
    if (outside == 0) return std::nullopt;
    for (int s = 0; s < n; ++s) {
      if (!inBase[s]) continue;
      if (static_cast<int>(best.size()) == outside + 2) break;  // cannot improve
      path = {s};
      dfs(s);
    }
    if (best.empty()) return std::nullopt;
    std::vector<VertexId> out;
    for (int i : best) out.push_back(im.label[i]);
    return out;
  }
};

}  // namespace

std::optional<std::vector<VertexId>> longest_ear(const Graph& g,
                                                 const std::set<VertexId>& base) {
  EarSearch es(g, base);
  return es.run();
}

}  // namespace p3pack
