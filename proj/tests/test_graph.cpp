#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "p3pack/graph.hpp"
#include "p3pack/graph_io.hpp"

using namespace p3pack;

TEST_CASE("neighbors on fixed graphs") {
  Graph tri = Graph::complete(3);
  CHECK(tri.neighbors(0) == std::set<VertexId>{1, 2});

  Graph k4 = Graph::complete(4);
  CHECK(k4.neighbors(0) == std::set<VertexId>{1, 2, 3});

  Graph net = Graph::net();
  CHECK(net.neighbors(3) == std::set<VertexId>{0});  // pendant sees its corner
  CHECK_THROWS_WITH(net.neighbors(99), "vertex not in graph");
}

TEST_CASE("delete_vertices keeps labels stable") {
  Graph k4 = Graph::complete(4);
  Graph tri = k4.delete_vertex(0);
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.num_edges() == 3);
  CHECK(tri.has_vertex(3));
  CHECK_FALSE(tri.has_vertex(0));

  Graph net = Graph::net();
  Graph core = net.delete_vertices({3, 4, 5});
  CHECK(core.num_vertices() == 3);
  CHECK(core.num_edges() == 3);

  Graph p3 = Graph::path(3);
  Graph iso = p3.delete_vertices({1});
  CHECK(iso.num_vertices() == 2);
  CHECK(iso.num_edges() == 0);

  CHECK(net.delete_vertices({}) == net);
}

TEST_CASE("delete_edges") {
  Graph tri = Graph::complete(3);
  Graph p3 = tri.delete_edges({Edge(0, 1)});
  CHECK(p3.num_edges() == 2);
  CHECK(p3.num_vertices() == 3);

  Graph k4 = Graph::complete(4);
  Graph c4 = k4.delete_edges({Edge(0, 1), Edge(2, 3)});
  CHECK(c4.is_cycle_graph());

  Graph claw = Graph::with_vertices(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  Graph bare = claw.delete_edges(claw.edges());
  CHECK(bare.num_edges() == 0);
  CHECK(bare.num_vertices() == 4);

  CHECK_THROWS(tri.delete_edges({Edge(7, 8)}));
}

TEST_CASE("claw detection") {
  Graph claw = Graph::with_vertices(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  auto w = claw.find_claw();
  REQUIRE(w.has_value());
  CHECK(w->center == 0);

  CHECK(Graph::net().is_claw_free());
  auto [lk4, mapping] = Graph::complete(4).line_graph();
  CHECK(lk4.is_claw_free());
}

TEST_CASE("edge-induced subgraphs") {
  Graph k4 = Graph::complete(4);
  Graph match = k4.edge_subgraph({Edge(0, 1)});
  CHECK(match.num_vertices() == 2);
  CHECK(match.num_edges() == 1);

  Graph star = k4.edge_subgraph({Edge(0, 1), Edge(0, 2), Edge(0, 3)});
  CHECK(star.num_vertices() == 4);
  CHECK(star.num_edges() == 3);
  CHECK(star.find_claw().has_value());

  Graph tri = k4.edge_subgraph({Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.num_edges() == 3);
}

TEST_CASE("connected components") {
  CHECK(Graph().connected_components().empty());

  Graph two = Graph::complete(3);
  for (int i = 3; i < 6; ++i) two.add_vertex(i);
  two.add_edge(3, 4);
  two.add_edge(4, 5);
  two.add_edge(3, 5);
  auto comps = two.connected_components();
  CHECK(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);

  CHECK(Graph::net().connected_components().size() == 1);
}

TEST_CASE("line graphs") {
  auto [lp3, m1] = Graph::path(3).line_graph();
  CHECK(lp3.num_vertices() == 2);
  CHECK(lp3.num_edges() == 1);

  Graph claw = Graph::with_vertices(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  auto [lclaw, m2] = claw.line_graph();
  CHECK(lclaw.num_vertices() == 3);
  CHECK(lclaw.num_edges() == 3);  // triangle

  auto [lc5, m3] = Graph::cycle(5).line_graph();
  CHECK(lc5.is_cycle_graph());
  CHECK(lc5.num_vertices() == 5);
}

TEST_CASE("line graph size identities on random graphs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = Graph::with_vertices(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j);
    auto [lg, mapping] = g.line_graph();
    CHECK(lg.num_vertices() == g.num_edges());
    int expect = 0;
    for (VertexId v : g.vertices()) {
      int d = g.degree(v);
      expect += d * (d - 1) / 2;
    }
    CHECK(lg.num_edges() == expect);
    CHECK(lg.is_claw_free());
    lg.check_consistent();
  }
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    int n = static_cast<int>(rng() % 20);
    Graph g = Graph::with_vertices(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2 == 0) g.add_edge(i, j);
    Graph back = from_graph6(to_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph6 known encodings") {
  // hand-computed: K4, K5, and C5 in natural labeling
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(Graph::complete(5)) == "D~{");
  CHECK(to_graph6(Graph::cycle(5)) == "Dhc");
  CHECK(from_graph6("C~") == Graph::complete(4));
  CHECK(from_graph6(">>graph6<<C~") == Graph::complete(4));
  // nauty's canonical C5 uses a different labeling but the same structure
  Graph canon = from_graph6("DqK");
  CHECK(canon.is_cycle_graph());
  CHECK(canon.num_vertices() == 5);
}

TEST_CASE("edge list round trip") {
  Graph g = Graph::net();
  Graph back = from_edge_list(to_edge_list(g));
  CHECK(back == g);
  CHECK(to_edge_list(Graph::path(3)) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("connectivity helpers") {
  CHECK(is_k_connected(Graph::complete(4), 3));
  CHECK_FALSE(is_k_connected(Graph::complete(4), 4));
  CHECK(is_k_connected(Graph::cycle(5), 2));
  CHECK_FALSE(is_k_connected(Graph::path(5), 2));
  CHECK(is_k_connected(Graph::net(), 1));
  CHECK_FALSE(is_k_connected(Graph::net(), 2));
  CHECK(is_k_edge_connected(Graph::cycle(4), 2));
  CHECK_FALSE(is_k_edge_connected(Graph::path(4), 2));
  CHECK(is_k_edge_connected(Graph::complete(4), 3));
}
