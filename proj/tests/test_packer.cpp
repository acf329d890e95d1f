#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p3pack/decomposition.hpp"
#include "p3pack/graph.hpp"
#include "p3pack/oracle.hpp"
#include "p3pack/packer.hpp"
#include "p3pack/search.hpp"

using namespace p3pack;

namespace {

Graph prism() {
  Graph g = Graph::with_vertices(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

// Replace every vertex of K4 with a triangle.
Graph delta_k4() {
  Graph g = Graph::with_vertices(12);
  for (int v = 0; v < 4; ++v) {
    g.add_edge(3 * v, 3 * v + 1);
    g.add_edge(3 * v, 3 * v + 2);
    g.add_edge(3 * v + 1, 3 * v + 2);
  }
  // vertex v's slot for edge (v, w): the rank of w among v's other vertices
  auto slot = [](int v, int w) {
    int r = 0;
    for (int u = 0; u < 4; ++u) {
      if (u == v) continue;
      if (u == w) return 3 * v + r;
      ++r;
    }
    return -1;
  };
  for (int v = 0; v < 4; ++v)
    for (int w = v + 1; w < 4; ++w) g.add_edge(slot(v, w), slot(w, v));
  return g;
}

Graph random_graph(std::mt19937_64& rng, int n, int denom) {
  Graph g = Graph::with_vertices(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % static_cast<unsigned>(denom) == 0) g.add_edge(i, j);
  return g;
}

// random 2-connected claw-free graph via line graphs of 2-edge-connected
// graphs, rejection otherwise
Graph random_two_connected_clawfree(std::mt19937_64& rng, int maxV) {
  while (true) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph h = random_graph(rng, n, 3);
    if (!h.is_connected() || !is_k_edge_connected(h, 2)) continue;
    auto [lg, m] = h.line_graph();
    if (lg.num_vertices() < 4 || lg.num_vertices() > maxV) continue;
    if (!is_k_connected(lg, 2)) continue;
    return lg;
  }
}

Graph random_connected_clawfree(std::mt19937_64& rng, int n) {
  while (true) {
    Graph g = random_graph(rng, n, 3 + static_cast<int>(rng() % 3));
    if (g.is_connected() && g.is_claw_free()) return g;
  }
}

}  // namespace

TEST_CASE("ear assembly on cycles and K4") {
  auto c7 = ear_assembly(Graph::cycle(7));
  CHECK(c7.r() == 0);
  CHECK(c7.base_cycle.size() == 7);
  CHECK(c7.frame == Graph::cycle(7));

  auto k4 = ear_assembly(Graph::complete(4));
  CHECK(k4.r() == 0);  // Hamiltonian 4-cycle, no ear has two edges left
  CHECK(k4.base_cycle.size() == 4);
  CHECK(is_k_connected(k4.frame, 2));
  CHECK(k4.frame.num_vertices() == 4);
  // minimal: removing any frame edge breaks 2-connectivity
  for (const Edge& e : k4.frame.edges())
    CHECK_FALSE(is_k_connected(k4.frame.delete_edges({e}), 2));

  CHECK_THROWS_WITH(ear_assembly(Graph::path(4)), "graph not 2-connected");
}

TEST_CASE("ear assembly with anchor") {
  Graph k4 = Graph::complete(4);
  for (const Edge& e : k4.edges()) {
    auto asmb = ear_assembly(k4, e);
    // anchor endpoints lie on the base cycle (edge inside or chord)
    std::set<VertexId> onCycle(asmb.base_cycle.begin(), asmb.base_cycle.end());
    CHECK(onCycle.count(e.u));
    CHECK(onCycle.count(e.v));
  }

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    Graph g = random_two_connected_clawfree(rng, 12);
    std::vector<Edge> es = g.edges();
    Edge e = es[rng() % es.size()];
    auto asmb = ear_assembly(g, e);
    std::set<VertexId> onCycle(asmb.base_cycle.begin(), asmb.base_cycle.end());
    CHECK(onCycle.count(e.u));
    CHECK(onCycle.count(e.v));
    CHECK(asmb.frame.num_vertices() == g.num_vertices());
    CHECK(is_k_connected(asmb.frame, 2));
  }
}

TEST_CASE("ear assembly frames are minimal on small instances") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 8; ++iter) {
    Graph g = random_two_connected_clawfree(rng, 10);
    auto asmb = ear_assembly(g);
    for (const Edge& e : asmb.frame.edges())
      CHECK_FALSE(is_k_connected(asmb.frame.delete_edges({e}), 2));
  }
}

TEST_CASE("claw-free frame structure") {
  auto pf = clawfree_frame(prism());
  CHECK(pf.frame_c.is_claw_free());
  CHECK(pf.frame_c.max_degree() <= 3);
  CHECK(pf.frame_c.num_vertices() == 6);

  auto df = clawfree_frame(delta_k4());
  CHECK(df.frame_c.is_claw_free());
  CHECK(df.frame_c.max_degree() <= 3);

  CHECK_THROWS_WITH(clawfree_frame(Graph::cycle(6)), "input is a cycle");

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 6; ++iter) {
    Graph g = random_two_connected_clawfree(rng, 12);
    if (g.is_cycle_graph()) continue;
    auto f = clawfree_frame(g);
    CHECK(f.frame_c.is_claw_free());
    CHECK(f.frame_c.max_degree() <= 3);
    CHECK(is_k_connected(f.frame_c, 2));
  }
}

TEST_CASE("pack_two_connected fixed instances") {
  Packing c9 = pack_two_connected(Graph::cycle(9));
  CHECK(c9.size() == 3);
  CHECK_FALSE(validate_factor(Graph::cycle(9), c9).has_value());

  Packing pr = pack_two_connected(prism());
  CHECK(pr.size() == 2);
  CHECK_FALSE(validate_factor(prism(), pr).has_value());

  Packing k4 = pack_two_connected(Graph::complete(4));
  CHECK(k4.size() == 1);

  Packing dk4 = pack_two_connected(delta_k4());
  CHECK(dk4.size() == 4);
  CHECK_FALSE(validate_factor(delta_k4(), dk4).has_value());
}

TEST_CASE("pack_two_connected achieves floor(v/3) with the right residue") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = random_two_connected_clawfree(rng, 15);
    Packing p = pack_two_connected(g);
    int v = g.num_vertices();
    CHECK(p.size() == v / 3);
    CHECK_FALSE(validate_packing(g, p).has_value());
    std::set<VertexId> left = g.vertex_set();
    for (VertexId u : p.covered()) left.erase(u);
    CHECK(static_cast<int>(left.size()) == v % 3);
    if (left.size() == 2) {
      auto it = left.begin();
      VertexId a = *it++;
      CHECK(g.has_edge(a, *it));
    }
  }
}

TEST_CASE("pack_chain fixed instances") {
  // two triangles sharing a vertex
  Graph bowtie = Graph::complete(3);
  bowtie.add_vertex(3);
  bowtie.add_vertex(4);
  bowtie.add_edge(2, 3);
  bowtie.add_edge(2, 4);
  bowtie.add_edge(3, 4);
  REQUIRE(is_chain(bowtie));
  Packing pb = pack_chain(bowtie);
  CHECK(pb.size() == 1);

  Packing p6 = pack_chain(Graph::path(6));
  CHECK(p6.size() == 2);
  CHECK_FALSE(validate_factor(Graph::path(6), p6).has_value());

  // triangle with a pendant 3-vertex path
  Graph tp = Graph::complete(3);
  for (int i = 3; i < 6; ++i) tp.add_vertex(i);
  tp.add_edge(2, 3);
  tp.add_edge(3, 4);
  tp.add_edge(4, 5);
  REQUIRE(end_block_count(tp) == 2);
  Packing ptp = pack_chain(tp);
  CHECK(ptp.size() == 2);
  CHECK_FALSE(validate_factor(tp, ptp).has_value());

  CHECK_THROWS_WITH(pack_chain(Graph::net()), "not a chain");
  CHECK(pack_chain(Graph::path(2)).size() == 0);
}

TEST_CASE("pack_chain equals the oracle on random claw-free chains") {
  std::mt19937_64 rng(424242);
  int tested = 0;
  for (int iter = 0; iter < 2000 && tested < 60; ++iter) {
    int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_connected_clawfree(rng, n);
    if (end_block_count(g) > 2) continue;
    ++tested;
    Packing p = pack_chain(g);
    CHECK(p.size() == g.num_vertices() / 3);
    CHECK_FALSE(validate_packing(g, p).has_value());
    CHECK(p.size() == lambda_exact(g).first);
  }
  CHECK(tested == 60);
}

TEST_CASE("trim_end_chain") {
  // P5 as an end-chain with boundary at one endpoint: v=5, remove {b,b'}
  Graph p5 = Graph::path(5);
  TrimResult t = trim_end_chain(p5, 4);
  CHECK(t.removed.size() == 3);
  CHECK(t.factor.size() == 1);
  CHECK_FALSE(t.removed.count(4));

  // triangle with a pendant at the boundary: v=4, trimmed = triangle
  Graph tp = Graph::complete(3);
  tp.add_vertex(3);
  tp.add_edge(2, 3);
  TrimResult t2 = trim_end_chain(tp, 3);
  CHECK(t2.removed == std::set<VertexId>{0, 1, 2});
  CHECK(t2.factor.size() == 1);

  // v = 3: the path itself
  TrimResult t3 = trim_end_chain(Graph::path(3), 2);
  CHECK(t3.removed.size() == 3);
  CHECK(t3.factor.size() == 1);

  CHECK_THROWS(trim_end_chain(Graph::path(2), 1));
}

TEST_CASE("reduce on fixed graphs") {
  // chains reduce trivially
  auto tr = reduce(Graph::cycle(8));
  CHECK(tr.steps.empty());
  CHECK(tr.kind == ResidualKind::chain);
  CHECK(tr.residual == Graph::cycle(8));

  // the net is already a cactus
  auto net = reduce(Graph::net());
  CHECK(net.steps.empty());
  CHECK(net.kind == ResidualKind::cactus);
  CHECK(net.residual == Graph::net());

  // net with every leaf edge subdivided twice: end-chains of 3 edges
  Graph spider = Graph::complete(3);
  int next = 3;
  for (int corner = 0; corner < 3; ++corner) {
    int a = next++, b = next++, c = next++;
    spider.add_vertex(a);
    spider.add_vertex(b);
    spider.add_vertex(c);
    spider.add_edge(corner, a);
    spider.add_edge(a, b);
    spider.add_edge(b, c);
  }
  REQUIRE(spider.is_claw_free());
  auto str = reduce(spider);
  CHECK_FALSE(str.steps.empty());
  int trimmed = 0;
  for (const auto& s : str.steps) trimmed += static_cast<int>(s.removed.size());
  CHECK(trimmed % 3 == 0);
  // packing identity: trimmed paths + residual optimum = overall optimum
  CHECK(str.trimmed_paths() + lambda_exact(str.residual).first ==
        lambda_exact(spider).first);
}

TEST_CASE("reduction invariant on random claw-free graphs") {
  std::mt19937_64 rng(777);
  int tested = 0, withSteps = 0;
  while (tested < 50) {
    int n = 6 + static_cast<int>(rng() % 7);
    Graph g = random_connected_clawfree(rng, n);
    ++tested;
    auto tr = reduce(g);
    std::set<VertexId> all;
    for (const auto& s : tr.steps) {
      CHECK(s.removed.size() % 3 == 0);
      CHECK(3 * s.factor.size() == s.removed.size());
      for (VertexId v : s.removed) CHECK(all.insert(v).second);  // disjoint
    }
    if (!tr.steps.empty()) ++withSteps;
    CHECK(tr.trimmed_paths() + lambda_exact(tr.residual).first ==
          lambda_exact(g).first);
    if (tr.kind == ResidualKind::cactus) CHECK(is_cactus(tr.residual));
  }
}

TEST_CASE("pack_clawfree fixed instances") {
  auto [netPack, netCert] = pack_clawfree(Graph::net());
  CHECK(netPack.size() == 1);
  CHECK(netCert.lower_bound == 1);  // floor((6-3+2)/3)
  CHECK(netCert.exact);

  auto [c9p, c9c] = pack_clawfree(Graph::cycle(9));
  CHECK(c9p.size() == 3);
  CHECK(c9c.exact);

  auto [pp, pc] = pack_clawfree(prism());
  CHECK(pp.size() == 2);

  // K8 with four pendants: cactus whose optimum beats the bound
  Graph k8p = Graph::complete(8);
  for (int i = 0; i < 4; ++i) {
    int leaf = k8p.add_vertex();
    k8p.add_edge(i, leaf);
  }
  REQUIRE(is_cactus(k8p));
  auto [kp, kc] = pack_clawfree(k8p);
  CHECK(kp.size() == 4);  // full factor, found via the exact cactus finish
  CHECK(kc.exact);
  CHECK(kc.lower_bound == 3);
}

TEST_CASE("pack_clawfree equals the oracle on random claw-free graphs") {
  std::mt19937_64 rng(31337);
  for (int tested = 0; tested < 60; ++tested) {
    int n = 4 + static_cast<int>(rng() % 9);
    Graph g = random_connected_clawfree(rng, n);
    auto [p, cert] = pack_clawfree(g);
    CHECK_FALSE(validate_packing(g, p).has_value());
    CHECK(cert.exact);
    CHECK(p.size() == lambda_exact(g).first);
    int eb = g.num_vertices() >= 2 ? end_block_count(g) : 0;
    if (eb >= 2) CHECK(p.size() >= (g.num_vertices() - eb + 2) / 3);
  }
}

TEST_CASE("clawfree_factor agrees with the oracle") {
  std::mt19937_64 rng(9999);
  for (int tested = 0; tested < 50; ++tested) {
    int n = 3 * (2 + static_cast<int>(rng() % 2));
    Graph g = random_connected_clawfree(rng, n);
    auto viaOracle = has_lambda_factor(g).first;
    auto cons = clawfree_factor(g);
    CHECK(cons.has_value() == viaOracle);
    if (cons) CHECK_FALSE(validate_factor(g, *cons).has_value());
  }
}
