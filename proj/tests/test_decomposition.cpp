#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p3pack/decomposition.hpp"
#include "p3pack/graph.hpp"

using namespace p3pack;

namespace {

// triangle 0,1,2 with a 3-edge path hanging off each corner
Graph spider_three_p4_legs() {
  Graph g = Graph::complete(3);
  int next = 3;
  for (int corner = 0; corner < 3; ++corner) {
    int a = next++, b = next++, c = next++;
    g.add_vertex(a);
    g.add_vertex(b);
    g.add_vertex(c);
    g.add_edge(corner, a);
    g.add_edge(a, b);
    g.add_edge(b, c);
  }
  return g;
}

Graph random_connected(std::mt19937_64& rng, int n) {
  while (true) {
    Graph g = Graph::with_vertices(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 4 == 0) g.add_edge(i, j);
    if (g.is_connected()) return g;
  }
}

}  // namespace

TEST_CASE("block decomposition on fixed graphs") {
  auto p5 = block_decomposition(Graph::path(5));
  CHECK(p5.blocks.size() == 4);
  for (const Block& b : p5.blocks) CHECK(b.is_match);
  CHECK(p5.eb() == 2);
  CHECK(p5.cut_vertices == std::set<VertexId>{1, 2, 3});

  auto net = block_decomposition(Graph::net());
  CHECK(net.blocks.size() == 4);
  int matches = 0;
  for (const Block& b : net.blocks) matches += b.is_match;
  CHECK(matches == 3);
  CHECK(net.eb() == 3);

  auto k4 = block_decomposition(Graph::complete(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.eb() == 1);
  CHECK(k4.cut_vertices.empty());

  auto match = block_decomposition(Graph::path(2));
  CHECK(match.blocks.size() == 1);
  CHECK(match.eb() == 1);

  CHECK_THROWS_WITH(block_decomposition(Graph::with_vertices(4)),
                    "graph not connected");
}

TEST_CASE("block structure invariants on random graphs") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = random_connected(rng, 4 + static_cast<int>(rng() % 8));
    auto d = block_decomposition(g);
    // block vertex sets cover V
    std::set<VertexId> cover;
    for (const Block& b : d.blocks)
      cover.insert(b.vertices.begin(), b.vertices.end());
    CHECK(cover == g.vertex_set());
    // two blocks share at most one vertex, and shared vertices are cuts
    for (size_t i = 0; i < d.blocks.size(); ++i)
      for (size_t j = i + 1; j < d.blocks.size(); ++j) {
        std::vector<VertexId> inter;
        std::set_intersection(d.blocks[i].vertices.begin(), d.blocks[i].vertices.end(),
                              d.blocks[j].vertices.begin(), d.blocks[j].vertices.end(),
                              std::back_inserter(inter));
        CHECK(inter.size() <= 1);
        for (VertexId v : inter) CHECK(d.cut_vertices.count(v));
      }
    // cut vertices really cut
    for (VertexId v : d.cut_vertices)
      CHECK_FALSE(g.delete_vertex(v).is_connected());
    for (VertexId v : g.vertices())
      if (!d.cut_vertices.count(v) && g.num_vertices() > 2)
        CHECK(g.delete_vertex(v).is_connected());
  }
}

TEST_CASE("complete neighborhoods at cut vertices of claw-free graphs") {
  std::mt19937_64 rng(37);
  int tested = 0;
  for (int iter = 0; iter < 300 && tested < 25; ++iter) {
    Graph g = random_connected(rng, 5 + static_cast<int>(rng() % 5));
    if (!g.is_claw_free()) continue;
    auto d = block_decomposition(g);
    if (d.cut_vertices.empty()) continue;
    ++tested;
    for (VertexId x : d.cut_vertices) {
      // each side of the cut sees a complete neighborhood of x
      Graph rest = g.delete_vertex(x);
      for (const auto& comp : rest.connected_components()) {
        std::vector<VertexId> nbrs;
        for (VertexId w : g.neighbors(x))
          if (comp.count(w)) nbrs.push_back(w);
        for (size_t i = 0; i < nbrs.size(); ++i)
          for (size_t j = i + 1; j < nbrs.size(); ++j)
            CHECK(g.has_edge(nbrs[i], nbrs[j]));
      }
    }
  }
  CHECK(tested >= 10);
}

TEST_CASE("end chains on fixed graphs") {
  auto netChains = end_chains(Graph::net());
  REQUIRE(netChains.size() == 3);
  for (const auto& c : netChains) CHECK(c.vertices.size() == 2);

  auto spider = end_chains(spider_three_p4_legs());
  REQUIRE(spider.size() == 3);
  for (const auto& c : spider) {
    CHECK(c.vertices.size() == 4);  // three edges each
    CHECK(c.boundary < 3);          // the triangle corners
  }

  CHECK(end_chains(Graph::path(5)).empty());
  CHECK(end_chains(Graph::cycle(6)).empty());

  // claw: three match end-chains meeting at the center
  Graph claw = Graph::with_vertices(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  auto clawChains = end_chains(claw);
  REQUIRE(clawChains.size() == 3);
  for (const auto& c : clawChains) {
    CHECK(c.vertices.size() == 2);
    CHECK(c.boundary == 0);
  }
}

TEST_CASE("end chain count matches eb>=3 on random graphs") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = random_connected(rng, 4 + static_cast<int>(rng() % 8));
    int eb = end_block_count(g);
    auto chains = end_chains(g);
    if (eb <= 2) {
      CHECK(chains.empty());
    } else {
      CHECK(static_cast<int>(chains.size()) == eb);
      for (const auto& c : chains) {
        // each chain contains exactly one end-block and is proper
        CHECK(static_cast<int>(c.vertices.size()) < g.num_vertices());
        CHECK(c.vertices.count(c.boundary));
        // the boundary vertex is the only vertex adjacent to the rest
        for (VertexId v : c.vertices) {
          if (v == c.boundary) continue;
          for (VertexId w : g.neighbors(v)) CHECK(c.vertices.count(w));
        }
      }
    }
  }
}

TEST_CASE("chain and cactus predicates") {
  CHECK(is_chain(Graph::cycle(5)));
  CHECK(is_chain(Graph::path(6)));
  CHECK(is_chain(Graph::complete(4)));
  CHECK_FALSE(is_chain(Graph::net()));

  CHECK(is_cactus(Graph::net()));
  Graph claw = Graph::with_vertices(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK(is_cactus(claw));
  CHECK_FALSE(is_cactus(spider_three_p4_legs()));
  CHECK_FALSE(is_cactus(Graph::cycle(4)));

  // K8 with pendants on the first four vertices: a cactus with a factor
  Graph k8p = Graph::complete(8);
  for (int i = 0; i < 4; ++i) {
    int leaf = k8p.add_vertex();
    k8p.add_edge(i, leaf);
  }
  CHECK(is_cactus(k8p));
}

TEST_CASE("edge chains") {
  // 2-edge-connected core plus pendant leaves
  Graph g = Graph::cycle(4);
  int leaf = g.add_vertex();
  g.add_edge(0, leaf);
  CHECK(is_edge_chain(g));

  // two triangles joined by a bridge
  Graph two = Graph::complete(3);
  for (int i = 3; i < 6; ++i) two.add_vertex(i);
  two.add_edge(3, 4);
  two.add_edge(4, 5);
  two.add_edge(3, 5);
  two.add_edge(0, 3);
  CHECK(is_edge_chain(two));

  CHECK(is_edge_chain(Graph::net()));

  Graph claw = Graph::with_vertices(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK_FALSE(is_edge_chain(claw));
  CHECK_FALSE(is_edge_chain(Graph::path(4)));

  // three pieces in a path
  Graph three = two;
  for (int i = 6; i < 9; ++i) three.add_vertex(i);
  three.add_edge(6, 7);
  three.add_edge(7, 8);
  three.add_edge(6, 8);
  three.add_edge(4, 6);
  CHECK(is_edge_chain(three));

  // star of three triangles around a center triangle: condensation not a path
  Graph star = Graph::complete(3);
  int next = 3;
  for (int corner = 0; corner < 3; ++corner) {
    int a = next++, b = next++, c = next++;
    star.add_vertex(a);
    star.add_vertex(b);
    star.add_vertex(c);
    star.add_edge(a, b);
    star.add_edge(b, c);
    star.add_edge(a, c);
    star.add_edge(corner, a);
  }
  CHECK_FALSE(is_edge_chain(star));
}
