#include "p3pack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace p3pack {

std::set<VertexId> Packing::covered() const {
  std::set<VertexId> out;
  for (const auto& t : paths) out.insert(t.begin(), t.end());
  return out;
}

void Packing::append(const Packing& other) {
  paths.insert(paths.end(), other.paths.begin(), other.paths.end());
}

std::optional<std::string> validate_packing(const Graph& g, const Packing& p) {
  std::set<VertexId> seen;
  for (const auto& [a, b, c] : p.paths) {
    if (!g.has_vertex(a) || !g.has_vertex(b) || !g.has_vertex(c))
      return "path vertex not in host";
    if (!g.has_edge(a, b) || !g.has_edge(b, c)) return "path edge not in host";
    for (VertexId v : {a, b, c})
      if (!seen.insert(v).second) {
        std::ostringstream os;
        os << "vertex " << v << " reused across paths";
        return os.str();
      }
  }
  return std::nullopt;
}

std::optional<std::string> validate_factor(const Graph& g, const Packing& p) {
  if (auto err = validate_packing(g, p)) return err;
  if (3 * p.size() != g.num_vertices()) return "packing is not spanning";
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

struct BitGraph {
  IndexMap im;
  std::vector<Mask> adj;        // adjacency usable inside paths
  std::vector<Mask> chord;      // original adjacency (for induced tests)
  Mask full = 0;

  BitGraph(const Graph& g, const std::set<Edge>& forbidden)
      : im(g), adj(im.size(), 0), chord(im.size(), 0) {
    int n = im.size();
    for (int i = 0; i < n; ++i) {
      for (VertexId w : g.neighbors(im.label[i])) {
        int j = im.index.at(w);
        chord[i] |= Mask(1) << j;
        if (!forbidden.count(Edge(im.label[i], w))) adj[i] |= Mask(1) << j;
      }
      full |= Mask(1) << i;
    }
  }

  std::array<VertexId, 3> labels(int a, int b, int c) const {
    return {im.label[a], im.label[b], im.label[c]};
  }
};

int lowest(Mask m) { return std::countr_zero(m); }

// Maximum-packing search over the mask of remaining vertices. `induced`
// forbids paths whose two ends are adjacent in the original graph.
struct MaxPackSearch {
  const BitGraph& bg;
  bool induced;
  std::unordered_map<Mask, int> memo;

  static constexpr size_t kMemoCap = size_t(1) << 24;

  int solve(Mask mask) {
    if (std::popcount(mask) < 3) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = lowest(mask);
    int best = solve(mask & ~(Mask(1) << v));  // v unused
    each_path(mask, v, [&](int a, int b, int c) {
      Mask rest = mask & ~((Mask(1) << a) | (Mask(1) << b) | (Mask(1) << c));
      best = std::max(best, 1 + solve(rest));
      return false;  // keep enumerating
    });
    if (memo.size() >= kMemoCap) memo.clear();
    memo[mask] = best;
    return best;
  }

  // Enumerates paths containing v within `mask`; f returns true to stop.
  template <typename F>
  bool each_path(Mask mask, int v, F&& f) {
    Mask nb = bg.adj[v] & mask;
    // v as center: a - v - b
    for (Mask ma = nb; ma;) {
      int a = lowest(ma);
      ma &= ma - 1;
      for (Mask mb = ma; mb;) {
        int b = lowest(mb);
        mb &= mb - 1;
        if (induced && ((bg.chord[a] >> b) & 1)) continue;
        if (f(a, v, b)) return true;
      }
    }
    // v as end: v - a - b
    for (Mask ma = nb; ma;) {
      int a = lowest(ma);
      ma &= ma - 1;
      Mask mb = bg.adj[a] & mask & ~(Mask(1) << v) & ~(Mask(1) << a);
      for (; mb;) {
        int b = lowest(mb);
        mb &= mb - 1;
        if (induced && ((bg.chord[v] >> b) & 1)) continue;
        if (f(v, a, b)) return true;
      }
    }
    return false;
  }

  void reconstruct(Mask mask, Packing& out) {
    while (std::popcount(mask) >= 3) {
      int total = solve(mask);
      if (total == 0) break;
      int v = lowest(mask);
      if (solve(mask & ~(Mask(1) << v)) == total) {
        mask &= ~(Mask(1) << v);
        continue;
      }
      bool found = each_path(mask, v, [&](int a, int b, int c) {
        Mask rest = mask & ~((Mask(1) << a) | (Mask(1) << b) | (Mask(1) << c));
        if (1 + solve(rest) == total) {
          out.paths.push_back(bg.labels(a, b, c));
          mask = rest;
          return true;
        }
        return false;
      });
      if (!found) throw std::logic_error("packing reconstruction failed");
    }
  }
};

// Spanning search: every remaining vertex must be covered.
struct FactorSearch {
  const BitGraph& bg;
  std::optional<Edge> required_edge;
  std::unordered_set<Mask> dead;
  std::vector<std::array<VertexId, 3>> stack;

  bool solve(Mask mask) {
    if (mask == 0) return true;
    if (std::popcount(mask) % 3 != 0) return false;
    if (dead.count(mask)) return false;
    int v = lowest(mask);
    MaxPackSearch helper{bg, false, {}};
    bool ok = helper.each_path(mask, v, [&](int a, int b, int c) {
      Mask rest = mask & ~((Mask(1) << a) | (Mask(1) << b) | (Mask(1) << c));
      stack.push_back(bg.labels(a, b, c));
      if (solve(rest)) return true;
      stack.pop_back();
      return false;
    });
    if (!ok) {
      if (dead.size() >= (size_t(1) << 24)) dead.clear();
      dead.insert(mask);
    }
    return ok;
  }
};

Mask mask_of(const BitGraph& bg, const std::set<VertexId>& vs) {
  Mask m = 0;
  for (VertexId v : vs) {
    auto it = bg.im.index.find(v);
    if (it != bg.im.index.end()) m |= Mask(1) << it->second;
  }
  return m;
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.num_vertices() > cap) {
    std::ostringstream os;
    os << "oracle cap: " << what << " limited to " << cap << " vertices, got "
       << g.num_vertices();
    throw OracleCapError(os.str());
  }
}

}  // namespace

std::pair<int, Packing> lambda_exact(const Graph& g, const OracleLimits& lim) {
  check_cap(g, lim.packing_cap, "lambda_exact");
  BitGraph bg(g, {});
  MaxPackSearch s{bg, false, {}};
  int best = s.solve(bg.full);
  Packing w;
  s.reconstruct(bg.full, w);
  if (static_cast<int>(w.paths.size()) != best)
    throw std::logic_error("witness size mismatch");
  return {best, w};
}

std::pair<int, Packing> lambda_induced_exact(const Graph& g, const OracleLimits& lim) {
  check_cap(g, lim.packing_cap, "lambda_induced_exact");
  BitGraph bg(g, {});
  MaxPackSearch s{bg, true, {}};
  int best = s.solve(bg.full);
  Packing w;
  s.reconstruct(bg.full, w);
  return {best, w};
}

std::pair<bool, std::optional<Packing>> has_lambda_factor(const Graph& g,
                                                          const PackingConstraint& c,
                                                          const OracleLimits& lim) {
  Graph host = c.forbidden_vertices.empty() ? g : g.delete_vertices(c.forbidden_vertices);
  check_cap(host, lim.packing_cap, "has_lambda_factor");
  if (host.num_vertices() % 3 != 0) return {false, std::nullopt};
  if (c.required_path) {
    auto [a, b, m] = *c.required_path;
    (void)m;
  }
  BitGraph bg(host, c.forbidden_edges);
  Mask start = bg.full;
  Packing placed;
  if (c.required_path) {
    auto [a, b, cc] = *c.required_path;
    for (VertexId v : {a, b, cc})
      if (!host.has_vertex(v)) return {false, std::nullopt};
    if (!host.has_edge(a, b) || !host.has_edge(b, cc)) return {false, std::nullopt};
    if (c.forbidden_edges.count(Edge(a, b)) || c.forbidden_edges.count(Edge(b, cc)))
      return {false, std::nullopt};
    placed.paths.push_back({a, b, cc});
    start &= ~mask_of(bg, {a, b, cc});
  }
  if (c.required_edge) {
    Edge e = *c.required_edge;
    if (!host.has_vertex(e.u) || !host.has_vertex(e.v) || !host.has_edge(e))
      return {false, std::nullopt};
    if (c.forbidden_edges.count(e)) return {false, std::nullopt};
    if (c.required_path) {
      // required path must already contain the edge, otherwise place both
      auto [a, b, cc] = *c.required_path;
      bool inside = (Edge(a, b) == e) || (Edge(b, cc) == e);
      if (!inside) {
        // fall through: search with the edge among the remaining vertices
      } else {
        FactorSearch fs{bg, std::nullopt, {}, {}};
        if (fs.solve(start)) {
          Packing out = placed;
          for (auto& t : fs.stack) out.paths.push_back(t);
          return {true, out};
        }
        return {false, std::nullopt};
      }
    }
    // try every path through e = (u, v): w-u-v, u-v-w, and u or v centered
    int ui = bg.im.index.at(e.u), vi = bg.im.index.at(e.v);
    std::vector<std::array<int, 3>> cands;
    for (Mask mw = bg.adj[ui] & start & ~(Mask(1) << vi); mw;) {
      int w = lowest(mw);
      mw &= mw - 1;
      cands.push_back({w, ui, vi});
    }
    for (Mask mw = bg.adj[vi] & start & ~(Mask(1) << ui); mw;) {
      int w = lowest(mw);
      mw &= mw - 1;
      cands.push_back({ui, vi, w});
    }
    for (const auto& t : cands) {
      if (((start >> t[0]) & 1) == 0 || ((start >> t[1]) & 1) == 0 ||
          ((start >> t[2]) & 1) == 0)
        continue;
      Mask rest = start & ~((Mask(1) << t[0]) | (Mask(1) << t[1]) | (Mask(1) << t[2]));
      FactorSearch fs{bg, std::nullopt, {}, {}};
      if (fs.solve(rest)) {
        Packing out = placed;
        out.paths.push_back(bg.labels(t[0], t[1], t[2]));
        for (auto& q : fs.stack) out.paths.push_back(q);
        return {true, out};
      }
    }
    return {false, std::nullopt};
  }
  FactorSearch fs{bg, std::nullopt, {}, {}};
  if (fs.solve(start)) {
    Packing out = placed;
    for (auto& t : fs.stack) out.paths.push_back(t);
    return {true, out};
  }
  return {false, std::nullopt};
}

std::pair<int, std::vector<Edge>> max_induced_matching(const Graph& g,
                                                       const OracleLimits& lim) {
  check_cap(g, lim.packing_cap, "max_induced_matching");
  std::vector<Edge> es = g.edges();
  int m = static_cast<int>(es.size());
  if (m > lim.edge_cap) {
    std::ostringstream os;
    os << "oracle cap: max_induced_matching limited to " << lim.edge_cap
       << " edges, got " << m;
    throw OracleCapError(os.str());
  }
  // conflict[i]: edges sharing a vertex with i or joined to i by an edge
  std::vector<Mask> conflict(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool bad = false;
      for (VertexId a : {es[i].u, es[i].v})
        for (VertexId b : {es[j].u, es[j].v})
          if (a == b || g.has_edge(a, b)) bad = true;
      if (bad) {
        conflict[i] |= Mask(1) << j;
        conflict[j] |= Mask(1) << i;
      }
    }
  int best = 0;
  std::vector<int> cur, bestSet;
  auto rec = [&](auto&& self, Mask cand) -> void {
    if (static_cast<int>(cur.size()) + std::popcount(cand) <= best) return;
    if (cand == 0) {
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        bestSet = cur;
      }
      return;
    }
    int i = lowest(cand);
    // include i
    cur.push_back(i);
    self(self, cand & ~(Mask(1) << i) & ~conflict[i]);
    cur.pop_back();
    // exclude i
    self(self, cand & ~(Mask(1) << i));
  };
  Mask all = m == 64 ? ~Mask(0) : ((Mask(1) << m) - 1);
  rec(rec, all);
  std::vector<Edge> out;
  for (int i : bestSet) out.push_back(es[i]);
  std::sort(out.begin(), out.end());
  return {best, out};
}

namespace {

std::pair<int, std::set<VertexId>> domination_search(const Graph& g, bool independent,
                                                     int cap) {
  check_cap(g, cap, independent ? "independent_domination" : "domination");
  BitGraph bg(g, {});
  int n = bg.im.size();
  if (n == 0) return {0, {}};
  std::vector<Mask> closed(n);
  for (int i = 0; i < n; ++i) closed[i] = bg.chord[i] | (Mask(1) << i);

  // greedy upper bound
  std::vector<int> greedy;
  {
    Mask dom = 0;
    while (dom != bg.full) {
      int bestv = -1, bestGain = -1;
      for (int i = 0; i < n; ++i) {
        int gain = std::popcount(closed[i] & ~dom);
        bool ok = !independent;
        if (independent) {
          ok = true;
          for (int c : greedy)
            if ((bg.chord[c] >> i) & 1) ok = false;
        }
        if (ok && gain > bestGain) {
          bestGain = gain;
          bestv = i;
        }
      }
      if (bestv < 0) break;  // independent greedy can stall; bound stays valid
      greedy.push_back(bestv);
      dom |= closed[bestv];
      if (dom == bg.full) break;
      if (bestGain == 0) break;
    }
    if (dom != bg.full) greedy.clear();
  }
  int best = greedy.empty() ? n + 1 : static_cast<int>(greedy.size());
  std::vector<int> bestSet(greedy.begin(), greedy.end());
  int maxClosed = 1;
  for (int i = 0; i < n; ++i) maxClosed = std::max(maxClosed, std::popcount(closed[i]));

  std::vector<int> cur;
  auto rec = [&](auto&& self, Mask dominated, Mask chosen) -> void {
    int lower = (std::popcount(bg.full & ~dominated) + maxClosed - 1) / maxClosed;
    if (static_cast<int>(cur.size()) + lower >= best) return;
    if (dominated == bg.full) {
      best = static_cast<int>(cur.size());
      bestSet = cur;
      return;
    }
    int u = lowest(bg.full & ~dominated);
    for (Mask mw = closed[u]; mw;) {
      int w = lowest(mw);
      mw &= mw - 1;
      if (independent && (chosen & bg.chord[w])) continue;
      cur.push_back(w);
      self(self, dominated | closed[w], chosen | (Mask(1) << w));
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  if (best > n) throw std::logic_error("domination search failed");
  std::set<VertexId> out;
  for (int i : bestSet) out.insert(bg.im.label[i]);
  return {best, out};
}

}  // namespace

std::pair<int, std::set<VertexId>> domination_exact(const Graph& g,
                                                    const OracleLimits& lim) {
  return domination_search(g, false, lim.domination_cap);
}

std::pair<int, std::set<VertexId>> independent_domination_exact(const Graph& g,
                                                                const OracleLimits& lim) {
  return domination_search(g, true, lim.domination_cap);
}

int max_matching_exact_small(const Graph& g) {
  if (g.num_vertices() > 16) throw OracleCapError("matching test oracle limited to 16");
  BitGraph bg(g, {});
  std::unordered_map<Mask, int> memo;
  auto rec = [&](auto&& self, Mask mask) -> int {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = lowest(mask);
    int best = self(self, mask & ~(Mask(1) << v));
    for (Mask mw = bg.adj[v] & mask; mw;) {
      int w = lowest(mw);
      mw &= mw - 1;
      best = std::max(best, 1 + self(self, mask & ~(Mask(1) << v) & ~(Mask(1) << w)));
    }
    memo[mask] = best;
    return best;
  };
  return rec(rec, bg.full);
}

}  // namespace p3pack
