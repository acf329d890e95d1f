#include "p3pack/packer.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "p3pack/search.hpp"

namespace p3pack {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw InternalCheckError(msg);
}

std::set<VertexId> to_set(const std::vector<VertexId>& v) {
  return std::set<VertexId>(v.begin(), v.end());
}

// Rotates/reflects a cycle so it starts at its smallest vertex and proceeds
// toward the smaller of that vertex's two cycle neighbors.
std::vector<VertexId> normalize_cycle(std::vector<VertexId> c) {
  if (c.empty()) return c;
  auto mn = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), mn, c.end());
  if (c.size() >= 3 && c[1] > c.back()) {
    std::reverse(c.begin() + 1, c.end());
  }
  return c;
}

}  // namespace

Packing split_cycle(const std::vector<VertexId>& cycle, int offset) {
  Packing p;
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i + 2 < n; i += 3) {
    p.paths.push_back({cycle[(offset + i) % n], cycle[(offset + i + 1) % n],
                       cycle[(offset + i + 2) % n]});
  }
  return p;
}

Packing split_path_sequence(const std::vector<VertexId>& path) {
  Packing p;
  int n = static_cast<int>(path.size());
  for (int i = 0; i + 2 < n; i += 3) p.paths.push_back({path[i], path[i + 1], path[i + 2]});
  return p;
}

EarAssembly ear_assembly(const Graph& g, std::optional<Edge> anchor) {
  if (!is_k_connected(g, 2)) throw std::invalid_argument("graph not 2-connected");
  EarAssembly out;
  if (anchor) {
    if (!g.has_edge(*anchor)) throw std::invalid_argument("anchor edge not in graph");
    out.base_cycle = longest_cycle_through(g, anchor->u, anchor->v);
  } else {
    out.base_cycle = longest_cycle(g);
  }
  require(static_cast<int>(out.base_cycle.size()) >= 3, "2-connected graph has no cycle");
  out.base_cycle = normalize_cycle(out.base_cycle);

  Graph frame;
  for (VertexId v : out.base_cycle) frame.add_vertex(v);
  int n = static_cast<int>(out.base_cycle.size());
  for (int i = 0; i < n; ++i)
    frame.add_edge(out.base_cycle[i], out.base_cycle[(i + 1) % n]);

  while (true) {
    auto ear = longest_ear(g, frame.vertex_set());
    if (!ear) break;
    require(ear->size() >= 3, "ear must have at least two edges");
    for (size_t i = 1; i + 1 < ear->size(); ++i) frame.add_vertex((*ear)[i]);
    for (size_t i = 0; i + 1 < ear->size(); ++i)
      frame.add_edge((*ear)[i], (*ear)[i + 1]);
    out.ears.push_back(*ear);
  }
  require(frame.num_vertices() == g.num_vertices(),
          "ear assembly did not span a 2-connected graph");
  out.frame = std::move(frame);
  return out;
}

ClawFreeFrame clawfree_frame(const Graph& g) {
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  if (g.is_cycle_graph()) throw std::invalid_argument("input is a cycle");
  ClawFreeFrame out;
  out.assembly = ear_assembly(g);
  const Graph& frame = out.assembly.frame;
  require(frame.max_degree() <= 3, "frame exceeds maximum degree three");

  // Search the matching M that kills every claw of the frame while keeping
  // the maximum degree at three. The theory promises exactly one solution;
  // zero or several is flagged loudly.
  std::vector<std::vector<Edge>> solutions;
  std::vector<Edge> chosen;
  std::function<void(const Graph&)> rec = [&](const Graph& cur) {
    if (solutions.size() >= 2) return;
    auto claw = cur.find_claw();
    if (!claw) {
      solutions.push_back(chosen);
      return;
    }
    const auto& ls = claw->leaves;
    for (auto [a, b] : {std::pair{ls[0], ls[1]}, std::pair{ls[0], ls[2]},
                        std::pair{ls[1], ls[2]}}) {
      if (!g.has_edge(a, b)) continue;
      if (cur.degree(a) >= 3 || cur.degree(b) >= 3) continue;
      Graph next = cur;
      next.add_edge(a, b);
      chosen.emplace_back(a, b);
      rec(next);
      chosen.pop_back();
    }
  };
  rec(frame);
  if (solutions.size() != 1) {
    std::ostringstream os;
    os << "claw-free frame matching not unique: " << solutions.size()
       << " completions found";
    throw InternalCheckError(os.str());
  }
  out.matching = solutions.front();
  std::sort(out.matching.begin(), out.matching.end());
  out.frame_c = frame;
  for (const Edge& e : out.matching) out.frame_c.add_edge(e);

  const Graph& fc = out.frame_c;
  require(fc.is_claw_free(), "frame_c not claw-free");
  require(fc.max_degree() <= 3, "frame_c exceeds degree three");
  require(is_k_connected(fc, 2), "frame_c not 2-connected");
  // every degree-3 vertex lies in exactly one triangle; triangle vertices
  // have degree three
  auto tris = fc.triangles();
  std::map<VertexId, int> tri_count;
  for (const auto& t : tris)
    for (VertexId v : t) ++tri_count[v];
  for (VertexId v : fc.vertices()) {
    if (fc.degree(v) == 3)
      require(tri_count[v] == 1, "degree-3 vertex not in exactly one triangle");
  }
  for (const auto& t : tris)
    for (VertexId v : t)
      require(fc.degree(v) == 3, "triangle vertex of frame_c without degree three");

  // behaviour of the frame under removal of the last ear
  if (out.assembly.r() >= 1) {
    std::set<VertexId> earVerts = to_set(out.assembly.ears.back());
    Graph rest = g.delete_vertices(earVerts);
    Graph fcRest = fc.delete_vertices(earVerts);
    require(rest.num_vertices() == 0 || fcRest.num_vertices() == rest.num_vertices(),
            "frame_c minus ear does not span");
    if (rest.num_vertices() >= 3) {
      require(fcRest.is_claw_free(), "frame_c minus last ear not claw-free");
      require(is_k_connected(fcRest, 2), "frame_c minus last ear not 2-connected");
    }
  }
  return out;
}

namespace {

// Single 2-connected block (or smaller): cycle split or ear recursion.
Packing pack_block_max(const Graph& g);

// Orders the blocks of a chain along its block-tree path, starting from a
// non-match end-block when one exists.
std::vector<int> chain_block_order(const ChainDecomposition& d) {
  int m = static_cast<int>(d.blocks.size());
  if (m == 1) return {0};
  if (d.eb() > 2) throw std::invalid_argument("not a chain");
  int start = d.end_blocks[0];
  // prefer starting from a big block so the match-end handling is rare
  for (int b : d.end_blocks)
    if (!d.blocks[b].is_match) {
      start = b;
      break;
    }
  std::vector<int> order{start};
  std::set<int> used{start};
  int cur = start;
  std::optional<VertexId> from;
  while (static_cast<int>(order.size()) < m) {
    VertexId frontier = -1;
    for (VertexId b : d.blocks[cur].boundary)
      if (!from || b != *from) frontier = b;
    require(frontier >= 0, "chain walk lost its frontier");
    const auto& owners = d.blocks_of_cut.at(frontier);
    require(owners.size() == 2, "chain cut vertex in more than two blocks");
    int next = owners[0] == cur ? owners[1] : owners[0];
    require(!used.count(next), "chain walk revisited a block");
    order.push_back(next);
    used.insert(next);
    from = frontier;
    cur = next;
  }
  return order;
}

VertexId shared_cut(const Block& a, const Block& b) {
  for (VertexId v : a.boundary)
    if (b.vertices.count(v)) return v;
  throw InternalCheckError("adjacent chain blocks share no cut vertex");
}

}  // namespace

Packing pack_two_connected(const Graph& g) {
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  if (!is_k_connected(g, 2)) throw std::invalid_argument("graph not 2-connected");

  std::function<Packing(const Graph&)> go = [&](const Graph& cur) -> Packing {
    if (cur.is_cycle_graph()) {
      std::vector<VertexId> cyc = normalize_cycle(longest_cycle(cur));
      return split_cycle(cyc);
    }
    EarAssembly asmb = ear_assembly(cur);
    if (asmb.r() == 0) return split_cycle(asmb.base_cycle);
    const std::vector<VertexId>& ear = asmb.ears.back();
    Packing p = split_path_sequence(ear);
    require(p.size() >= 1, "ear packing empty");
    Graph rest = cur.delete_vertices(p.covered());
    if (rest.num_vertices() > 0) {
      require(rest.is_claw_free(), "residual after ear packing not claw-free");
      require(rest.num_vertices() < 3 || is_k_connected(rest, 2),
              "residual after ear packing not 2-connected");
    }
    if (rest.num_vertices() < 3) return p;
    Packing q = go(rest);
    p.append(q);
    return p;
  };

  Packing p = go(g);
  require(3 * p.size() == g.num_vertices() - g.num_vertices() % 3,
          "2-connected packing missed the v/3 target");
  // residue witness: one leftover vertex, or two adjacent leftover vertices
  std::set<VertexId> left = g.vertex_set();
  for (VertexId v : p.covered()) left.erase(v);
  if (left.size() == 2) {
    auto it = left.begin();
    VertexId a = *it++, b = *it;
    require(g.has_edge(a, b), "two leftover vertices are not adjacent");
  }
  if (auto err = validate_packing(g, p)) throw InternalCheckError(*err);
  return p;
}

namespace {

Packing pack_block_max(const Graph& g) {
  if (g.num_vertices() < 3) return {};
  if (g.is_cycle_graph()) return split_cycle(normalize_cycle(longest_cycle(g)));
  return pack_two_connected(g);
}

// Complete factor finder used by the companion-edge searches; returns the
// factor (and whether the oracle had to finish the job).
std::optional<std::pair<Packing, bool>> component_factor(const Graph& g,
                                                         const OracleLimits& lim);

std::optional<std::pair<Packing, bool>> factor_or_null(const Graph& g,
                                                       const OracleLimits& lim) {
  if (g.num_vertices() % 3 != 0) return std::nullopt;
  Packing total;
  bool oracle_used = false;
  for (const auto& compVerts : g.connected_components()) {
    Graph comp = g.induced(compVerts);
    auto sub = component_factor(comp, lim);
    if (!sub) return std::nullopt;
    total.append(sub->first);
    oracle_used |= sub->second;
  }
  if (3 * total.size() != g.num_vertices()) return std::nullopt;
  return std::make_pair(total, oracle_used);
}

std::optional<std::pair<Packing, bool>> component_factor(const Graph& g,
                                                         const OracleLimits& lim) {
  int v = g.num_vertices();
  if (v == 0) return std::make_pair(Packing{}, false);
  if (v % 3 != 0) return std::nullopt;
  if (is_chain(g)) {
    Packing p = pack_chain(g);
    if (3 * p.size() == v) return std::make_pair(p, false);
    return std::nullopt;
  }
  auto [p, cert] = pack_clawfree(g, lim);
  if (3 * p.size() == v) return std::make_pair(p, cert.oracle_assisted);
  if (cert.exact) return std::nullopt;  // certified maximum below spanning
  if (v <= lim.packing_cap) {
    auto [ok, w] = has_lambda_factor(g, {}, lim);
    if (ok) return std::make_pair(*w, true);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Packing> clawfree_factor(const Graph& g, const OracleLimits& lim) {
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  auto r = factor_or_null(g, lim);
  if (!r) return std::nullopt;
  return r->first;
}

Packing pack_chain(const Graph& g) {
  OracleLimits lim;
  if (g.num_vertices() == 0) return {};
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  int v = g.num_vertices();
  if (v < 3) return {};
  ChainDecomposition d = block_decomposition(g);
  if (d.eb() > 2) throw std::invalid_argument("not a chain");
  std::vector<int> order = chain_block_order(d);
  int m = static_cast<int>(order.size());
  if (m == 1) return pack_block_max(g);

  const Block& b1 = d.blocks[order[0]];

  // prefix C with boundary vertex `bnd`; the prefix is B1 when B1 is a big
  // block, otherwise B1 together with the next block.
  std::set<VertexId> cVerts;
  VertexId bnd;
  if (!b1.is_match) {
    cVerts = b1.vertices;
    bnd = shared_cut(b1, d.blocks[order[1]]);
  } else if (m == 2) {
    // terminal: pendant match attached to the last block
    const Block& w = d.blocks[order[1]];
    VertexId x = shared_cut(b1, w);
    VertexId y = *std::find_if(b1.vertices.begin(), b1.vertices.end(),
                               [&](VertexId q) { return q != x; });
    Graph wg = g.induced(w.vertices);
    if (v % 3 != 0) return pack_block_max(wg);
    // a factor must cover the pendant via a triple (y, x, z)
    for (VertexId z : wg.neighbors(x)) {
      Graph rest = wg.delete_vertices({x, z});
      auto f = factor_or_null(rest, lim);
      if (f) {
        Packing p;
        p.paths.push_back({y, x, z});
        p.append(f->first);
        return p;
      }
    }
    throw InternalCheckError("pendant chain factor search failed");
  } else {
    const Block& b2 = d.blocks[order[1]];
    cVerts = b1.vertices;
    cVerts.insert(b2.vertices.begin(), b2.vertices.end());
    bnd = shared_cut(b2, d.blocks[order[2]]);
  }

  Graph c = g.induced(cVerts);
  int r = static_cast<int>(cVerts.size()) % 3;
  if (r == 0) {
    auto f = factor_or_null(c, lim);
    if (!f) throw InternalCheckError("chain prefix with v=0 mod 3 has no factor");
    Packing p = f->first;
    Packing q = pack_chain(g.delete_vertices(cVerts));
    p.append(q);
    return p;
  }
  if (r == 1) {
    Graph trimmed = c.delete_vertex(bnd);
    auto f = factor_or_null(trimmed, lim);
    if (!f) throw InternalCheckError("chain prefix minus boundary has no factor");
    std::set<VertexId> removed = cVerts;
    removed.erase(bnd);
    Packing p = f->first;
    Packing q = pack_chain(g.delete_vertices(removed));
    p.append(q);
    return p;
  }
  // r == 2: companion edge at the boundary
  for (VertexId b2 : c.neighbors(bnd)) {
    Graph trimmed = c.delete_vertices({bnd, b2});
    auto f = factor_or_null(trimmed, lim);
    if (!f) continue;
    std::set<VertexId> removed = cVerts;
    removed.erase(bnd);
    removed.erase(b2);
    Packing p = f->first;
    Packing q = pack_chain(g.delete_vertices(removed));
    p.append(q);
    return p;
  }
  throw InternalCheckError("chain companion-edge search failed");
}

TrimResult trim_end_chain(const Graph& chain, VertexId boundary, const OracleLimits& lim) {
  int v = chain.num_vertices();
  if (v < 3) throw std::invalid_argument("end-chain too small to trim");
  if (!chain.has_vertex(boundary)) throw std::invalid_argument("vertex not in graph");
  int r = v % 3;
  if (r == 0) {
    auto f = factor_or_null(chain, lim);
    if (!f) throw InternalCheckError("end-chain with v=0 mod 3 has no factor");
    return {chain.vertex_set(), f->first, f->second};
  }
  if (r == 1) {
    Graph trimmed = chain.delete_vertex(boundary);
    auto f = factor_or_null(trimmed, lim);
    if (!f) throw InternalCheckError("end-chain minus boundary has no factor");
    return {trimmed.vertex_set(), f->first, f->second};
  }
  for (VertexId b2 : chain.neighbors(boundary)) {
    Graph trimmed = chain.delete_vertices({boundary, b2});
    auto f = factor_or_null(trimmed, lim);
    if (f) return {trimmed.vertex_set(), f->first, f->second};
  }
  throw InternalCheckError("chain2mod3 violated: no companion edge at boundary");
}

ReductionTrace reduce(const Graph& g, const OracleLimits& lim) {
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  ReductionTrace out;
  Graph cur = g;
  while (true) {
    if (cur.num_vertices() < 2 || end_block_count(cur) <= 2) {
      out.kind = ResidualKind::chain;
      break;
    }
    auto chains = end_chains(cur);
    const EndChain* pick = nullptr;
    for (const auto& ch : chains)
      if (ch.vertices.size() >= 3) {
        pick = &ch;
        break;
      }
    if (!pick) {
      out.kind = ResidualKind::cactus;
      break;
    }
    Graph c = cur.induced(pick->vertices);
    TrimResult tr = trim_end_chain(c, pick->boundary, lim);
    out.steps.push_back({tr.removed, tr.factor, tr.oracle_assisted});
    cur = cur.delete_vertices(tr.removed);
    require(cur.num_vertices() == 0 || cur.is_connected(),
            "reduction disconnected the residual");
  }
  out.residual = std::move(cur);
  return out;
}

namespace {

// Lower-bound construction on a cactus: pack a chain through two end-blocks,
// then greedily extend on the leftovers.
Packing cactus_pack_constructive(const Graph& k) {
  ChainDecomposition d = block_decomposition(k);
  // block tree as a graph over block nodes and cut nodes
  int nb = static_cast<int>(d.blocks.size());
  auto neighbors_of_block = [&](int b) {
    std::vector<int> out;
    for (VertexId c : d.blocks[b].boundary)
      for (int o : d.blocks_of_cut.at(c))
        if (o != b) out.push_back(o);
    return out;
  };
  // best chain = block-path between a pair of end-blocks maximizing vertices
  std::vector<int> bestPath;
  size_t bestSize = 0;
  for (int s : d.end_blocks) {
    // BFS over blocks
    std::vector<int> par(nb, -2);
    par[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      for (int o : neighbors_of_block(b))
        if (par[o] == -2) {
          par[o] = b;
          q.push(o);
        }
    }
    for (int t : d.end_blocks) {
      if (t == s || par[t] == -2) continue;
      std::vector<int> path;
      std::set<VertexId> verts;
      for (int b = t; b != -1; b = par[b]) {
        path.push_back(b);
        verts.insert(d.blocks[b].vertices.begin(), d.blocks[b].vertices.end());
      }
      if (verts.size() > bestSize) {
        bestSize = verts.size();
        bestPath = path;
      }
    }
  }
  Packing total;
  std::set<VertexId> covered;
  if (!bestPath.empty()) {
    std::set<VertexId> chainVerts;
    for (int b : bestPath)
      chainVerts.insert(d.blocks[b].vertices.begin(), d.blocks[b].vertices.end());
    Packing p = pack_chain(k.induced(chainVerts));
    covered = p.covered();
    total = std::move(p);
  }
  // greedy extras among the uncovered vertices
  std::set<VertexId> rem = k.vertex_set();
  for (VertexId v : covered) rem.erase(v);
  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexId a : rem) {
      for (VertexId b : k.neighbors(a)) {
        if (!rem.count(b)) continue;
        for (VertexId c : k.neighbors(b)) {
          if (c == a || !rem.count(c)) continue;
          total.paths.push_back({a, b, c});
          rem.erase(a);
          rem.erase(b);
          rem.erase(c);
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  return total;
}

}  // namespace

std::pair<Packing, PackCertificate> pack_clawfree(const Graph& g, const OracleLimits& lim) {
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  if (!g.is_claw_free()) throw std::invalid_argument("graph not claw-free");
  int v = g.num_vertices();
  PackCertificate cert;
  cert.floor_v3 = v / 3;
  int eb = v >= 2 ? end_block_count(g) : 0;
  cert.lower_bound = eb >= 2 ? (v - eb + 2) / 3 : v / 3;

  ReductionTrace trace = reduce(g, lim);
  Packing total;
  for (const auto& st : trace.steps) {
    total.append(st.factor);
    cert.oracle_assisted |= st.oracle_assisted;
  }
  cert.residual = trace.kind;
  if (trace.kind == ResidualKind::chain) {
    Packing q = pack_chain(trace.residual);
    total.append(q);
    cert.exact = true;
    cert.method = "reduction+chain";
  } else {
    Packing cons = cactus_pack_constructive(trace.residual);
    if (trace.residual.num_vertices() <= lim.packing_cap) {
      auto [lam, witness] = lambda_exact(trace.residual, lim);
      if (lam > cons.size()) {
        total.append(witness);
        cert.oracle_assisted = true;
      } else {
        total.append(cons);
      }
      cert.exact = true;
      cert.method = "reduction+cactus(exact)";
    } else {
      total.append(cons);
      cert.exact = false;
      cert.method = "reduction+cactus(lower-bound)";
    }
  }
  cert.size = total.size();
  if (auto err = validate_packing(g, total)) throw InternalCheckError(*err);
  return {total, cert};
}

}  // namespace p3pack
