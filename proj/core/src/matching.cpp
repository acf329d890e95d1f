#include "p3pack/matching.hpp"

#include <algorithm>
#include <queue>

namespace p3pack {

namespace {

// Classic O(V^3) blossom algorithm on dense index arrays.
struct Blossom {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, parent, base;
  std::vector<bool> used, blossom;

  explicit Blossom(int n_)
      : n(n_), adj(n), match(n, -1), parent(n, -1), base(n), used(n), blossom(n) {}

  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  int lca(int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          q.push(match[to]);
        }
      }
    }
    return -1;
  }

  int solve() {
    int res = 0;
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      if (u == -1) continue;
      ++res;
      while (u != -1) {
        int pv = parent[u], ppv = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = ppv;
      }
    }
    return res;
  }
};

}  // namespace

std::vector<Edge> max_matching(const Graph& g) {
  IndexMap im(g);
  Blossom bl(im.size());
  for (const Edge& e : g.edges()) bl.add_edge(im.index.at(e.u), im.index.at(e.v));
  bl.solve();
  std::vector<Edge> out;
  for (int v = 0; v < im.size(); ++v)
    if (bl.match[v] > v) out.emplace_back(im.label[v], im.label[bl.match[v]]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace p3pack
