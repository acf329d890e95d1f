#include "p3pack/domination.hpp"

#include <algorithm>
#include <sstream>

namespace p3pack {

std::set<VertexId> StarFactor::centers() const {
  std::set<VertexId> out;
  for (const auto& s : stars) out.insert(s.center);
  return out;
}

StarFactor packing_to_star_factor(const Graph& g, const Packing& p) {
  if (auto err = validate_packing(g, p))
    throw std::invalid_argument("invalid packing: " + *err);
  StarFactor f;
  std::map<VertexId, int> star_of_center;
  for (const auto& t : p.paths) {
    star_of_center[t[1]] = static_cast<int>(f.stars.size());
    f.stars.push_back({t[1], {t[0], t[2]}});
  }
  std::set<VertexId> covered = p.covered();
  for (VertexId v : g.vertices()) {
    if (covered.count(v)) continue;
    bool attached = false;
    for (VertexId w : g.neighbors(v)) {
      auto it = star_of_center.find(w);
      if (it != star_of_center.end()) {
        f.stars[it->second].leaves.insert(v);
        attached = true;
        break;
      }
    }
    if (!attached) {
      star_of_center[v] = static_cast<int>(f.stars.size());
      f.stars.push_back({v, {}});
    }
    covered.insert(v);
  }
  return f;
}

std::optional<std::string> validate_star_factor(const Graph& g, const StarFactor& f) {
  std::set<VertexId> seen;
  for (const auto& s : f.stars) {
    if (!g.has_vertex(s.center)) return "center not in host";
    for (VertexId l : s.leaves) {
      if (!g.has_edge(s.center, l)) return "leaf not adjacent to its center";
      if (!seen.insert(l).second) return "vertex in two stars";
    }
    if (!seen.insert(s.center).second) return "vertex in two stars";
  }
  if (seen != g.vertex_set()) return "star factor does not span";
  // centers dominate by construction (every leaf touches its center)
  return std::nullopt;
}

GammaBoundsReport check_gamma_bounds(const Graph& g, const OracleLimits& lim) {
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  if (!is_k_connected(g, 2)) throw std::invalid_argument("graph not 2-connected");
  GammaBoundsReport r;
  int v = g.num_vertices();
  r.gamma = domination_exact(g, lim).first;
  r.gamma_independent = independent_domination_exact(g, lim).first;
  r.ceil_v3 = (v + 2) / 3;
  r.floor_v3 = v / 3;
  r.is_cycle = g.is_cycle_graph();
  r.bound_holds = r.gamma <= r.ceil_v3;
  r.equality_holds = r.gamma == r.gamma_independent;
  r.strict_bound_applies = !r.is_cycle && v % 3 == 1;
  r.strict_bound_holds = !r.strict_bound_applies || r.gamma <= r.floor_v3;
  return r;
}

HamClawReport check_ham_claw(const Graph& g, const std::vector<VertexId>& cycle,
                             const OracleLimits& lim) {
  HamClawReport r;
  if (!g.is_regular(3)) {
    r.detail = "graph not cubic";
    return r;
  }
  if (g.num_vertices() % 3 != 1) {
    r.detail = "order not 1 mod 3";
    return r;
  }
  if (static_cast<int>(cycle.size()) != g.num_vertices()) {
    r.detail = "cycle does not span";
    return r;
  }
  std::set<VertexId> onCycle(cycle.begin(), cycle.end());
  if (static_cast<int>(onCycle.size()) != g.num_vertices()) {
    r.detail = "cycle repeats a vertex";
    return r;
  }
  for (size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
      r.detail = "cycle uses a non-edge";
      return r;
    }
  r.hypotheses_ok = true;
  // in a cubic graph the claw at v is v plus its whole neighborhood
  for (VertexId v : g.vertices()) {
    std::vector<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::set<VertexId> drop{v, nb[0], nb[1], nb[2]};
    auto [ok, w] = has_lambda_factor(g.delete_vertices(drop), {}, lim);
    if (ok) {
      r.found = true;
      r.claw_center = v;
      r.claw_leaves = {nb[0], nb[1], nb[2]};
      return r;
    }
  }
  r.detail = "no claw removal leaves a factor";
  return r;
}

ReedArithmetic reed_counterexample_arithmetic(long k) {
  if (k < 3) throw std::invalid_argument("family starts at k = 3");
  ReedArithmetic r;
  r.order = 20 * k;
  // (1/3 + 1/60) * 20k = 20k/3 + k/3 = 7k
  r.gamma = 7 * k;
  r.lambda_upper = (r.order - r.gamma) / 2;
  r.matches_13_40 = 40 * r.lambda_upper == 13 * r.order;
  return r;
}

}  // namespace p3pack
