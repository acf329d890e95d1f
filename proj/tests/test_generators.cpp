#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p3pack/decomposition.hpp"
#include "p3pack/generators.hpp"
#include "p3pack/graph.hpp"
#include "p3pack/graph_io.hpp"
#include "p3pack/oracle.hpp"

using namespace p3pack;

TEST_CASE("triangle replacement of small pre-images") {
  // two vertices with three parallel edges -> prism
  Graph pr = gen_prism();
  CHECK(pr.num_vertices() == 6);
  CHECK(pr.is_regular(3));
  CHECK(pr.is_claw_free());
  CHECK(is_k_connected(pr, 3));
  CHECK(is_delta_graph(pr));

  // K4 pre-image: 12 vertices
  CubicMultigraph k4;
  k4.n = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.edges.emplace_back(i, j);
  Graph d = gen_delta(k4);
  CHECK(d.num_vertices() == 12);
  CHECK(d.is_regular(3));
  CHECK(d.is_claw_free());
  CHECK(is_delta_graph(d));
  CHECK(is_k_connected(d, 3));

  CubicMultigraph bad;
  bad.n = 2;
  bad.edges = {{0, 1}};
  CHECK_THROWS_WITH(gen_delta(bad), "pre-image not cubic");
}

TEST_CASE("triangle replacement connectivity classes and pre-image recovery") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 12; ++iter) {
    int n = 2 + 2 * static_cast<int>(rng() % 4);
    CubicMultigraph f = gen_random_cubic_multigraph(n, rng());
    Graph d = gen_delta(f);
    CHECK(d.num_vertices() == 3 * n);
    CHECK(d.is_regular(3));
    CHECK(d.is_claw_free());
    int kf = f.connectivity();
    for (int k = 1; k <= 3; ++k)
      CHECK(is_k_connected(d, k) == (kf >= k));
    // contracting the triangles recovers the pre-image
    auto pm = delta_preimage(d);
    REQUIRE(pm.has_value());
    CHECK(pm->f.n == f.n);
    std::multiset<std::pair<int, int>> a(f.edges.begin(), f.edges.end());
    std::multiset<std::pair<int, int>> b(pm->f.edges.begin(), pm->f.edges.end());
    CHECK(a == b);
  }
}

TEST_CASE("family-S membership") {
  // the smallest recipe is the net
  Graph star = Graph::with_vertices(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  Graph n = gen_family_s(star);
  CHECK(n.num_vertices() == 6);
  CHECK_FALSE(validate_family_s(n).has_value());
  CHECK_FALSE(has_lambda_factor(n).first);

  // net with each leaf extended by a pendant triangle + leaf: 15 vertices
  Graph sk = Graph::with_vertices(7);
  sk.add_edge(0, 1);
  sk.add_edge(0, 2);
  sk.add_edge(0, 3);
  sk.add_edge(1, 4);
  sk.add_edge(2, 5);
  sk.add_edge(3, 6);
  Graph big = gen_family_s(sk);
  CHECK(big.num_vertices() == 15);
  CHECK_FALSE(validate_family_s(big).has_value());
  CHECK_FALSE(has_lambda_factor(big).first);

  // two leaves only: rejected with the leaf condition named
  Graph p3 = Graph::path(3);
  CHECK_THROWS_WITH(gen_family_s(p3), "family-S recipe: fewer than three leaves");
}

TEST_CASE("random family-S members have no factor") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 15; ++iter) {
    Graph s = gen_family_s_random(1 + static_cast<int>(rng() % 4), rng());
    CHECK_FALSE(validate_family_s(s).has_value());
    CHECK(s.is_claw_free());
    if (s.num_vertices() <= 24) CHECK_FALSE(has_lambda_factor(s).first);
  }
}

TEST_CASE("construction R") {
  auto [g, a, b] = gen_construction_r(4, 4);
  CHECK(g.num_vertices() == 9);
  CHECK(g.is_claw_free());
  CHECK(g.is_connected());
  CHECK_FALSE(is_k_connected(g, 2));  // connectivity one

  // no factor through either distinguished edge (4 = 1 mod 3)
  for (Edge e : {a, b}) {
    PackingConstraint c;
    c.required_edge = e;
    CHECK_FALSE(has_lambda_factor(g, c).first);
  }

  auto bigger = gen_construction_r(7, 7);
  CHECK(bigger.graph.num_vertices() == 15);
  CHECK(bigger.graph.is_claw_free());
  PackingConstraint c;
  c.required_edge = bigger.a;
  CHECK_FALSE(has_lambda_factor(bigger.graph, c).first);

  CHECK_THROWS(gen_construction_r(2, 4));
}

TEST_CASE("construction Q") {
  auto [g, e] = gen_construction_q(5, 5);
  CHECK(g.num_vertices() == 12);
  CHECK(g.is_claw_free());
  CHECK(is_k_connected(g, 2));
  CHECK_FALSE(is_k_connected(g, 3));
  PackingConstraint c;
  c.required_edge = e;
  CHECK_FALSE(has_lambda_factor(g, c).first);
  // without the constraint a factor exists
  CHECK(has_lambda_factor(g).first);
}

TEST_CASE("construction H") {
  auto [h, t] = gen_construction_h();
  CHECK(h.num_vertices() == 9);
  CHECK(h.is_claw_free());
  CHECK(is_k_connected(h, 3));
  for (VertexId v : t) CHECK(h.degree(v) == 4);
  CHECK_FALSE(has_lambda_factor(h.delete_vertices({t[0], t[1], t[2]})).first);
}

TEST_CASE("random cubic generators") {
  Graph c = gen_random_cubic(6, 42);
  CHECK(c.is_regular(3));
  CHECK(c.num_vertices() == 6);

  CubicMultigraph f = gen_random_cubic_multigraph_connected(6, 43, 2);
  CHECK(f.is_cubic());
  CHECK(f.connectivity() >= 2);

  CHECK_THROWS(gen_random_cubic(5, 1));
}

TEST_CASE("random claw-free generators") {
  for (std::uint64_t s : {1ull, 2ull, 3ull}) {
    Graph lg = gen_random_clawfree(12, s, ClawFreeMethod::linegraph);
    CHECK(lg.num_vertices() == 12);
    CHECK(lg.is_claw_free());
    CHECK(lg.is_connected());

    Graph lc = gen_random_clawfree(10, s, ClawFreeMethod::local_complete);
    CHECK(lc.num_vertices() == 10);
    CHECK(lc.is_claw_free());
    CHECK(lc.is_connected());

    Graph two = gen_random_clawfree_2connected(9, s);
    CHECK(is_k_connected(two, 2));
    CHECK(two.is_claw_free());
  }
}

TEST_CASE("fixed seeds give bit-identical graphs") {
  for (const char* family : {"delta", "familyS", "cactus", "cubicRandom", "clawfreeRandom"}) {
    auto a = generate_family(family, {}, 12345, 3);
    auto b = generate_family(family, {}, 12345, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(to_graph6(a[i].graph) == to_graph6(b[i].graph));
  }
}

TEST_CASE("cactus generator") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    Graph k = gen_cactus(s);
    CHECK(k.is_claw_free());
    CHECK(is_cactus(k));
  }
}

TEST_CASE("family dispatch") {
  auto cyc = generate_family("cycle", {{"n", 9}}, 1, 1);
  CHECK(cyc[0].graph == Graph::cycle(9));
  auto r = generate_family("constructionR", {{"na", 4}, {"nb", 4}}, 1, 1);
  CHECK(r[0].distinguished.count("a"));
  CHECK(r[0].distinguished.count("b"));
  CHECK_THROWS(generate_family("nosuch", {}, 1, 1));

  Graph k8 = disjoint_k4s(2);
  CHECK(k8.num_vertices() == 8);
  CHECK(lambda_exact(k8).first == 2);
}
