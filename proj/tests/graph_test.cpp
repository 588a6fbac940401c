#include <doctest.h>

#include <map>
#include <sstream>

#include "nectar/errors.hpp"
#include "nectar/graph.hpp"
#include "nectar/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nectar;

TEST_SUITE_BEGIN("graph");

TEST_CASE("edge list parsing") {
  SUBCASE("triangle") {
    std::istringstream in("1 2\n2 3\n1 3");
    Graph g = Graph::load_edge_list(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.label(0) == "1");
    CHECK(g.label(2) == "3");
  }

  SUBCASE("symmetric duplicates collapse") {
    std::istringstream in("a b\nb a\na b");
    Graph g = Graph::load_edge_list(in);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
  }

  SUBCASE("self-loops are skipped and counted") {
    std::istringstream in("1 1\n1 2");
    Graph g = Graph::load_edge_list(in);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.self_loops_skipped() == 1);
  }

  SUBCASE("comments and blank lines") {
    std::istringstream in("# header\n\n1 2\n# trailing\n2 3\n");
    Graph g = Graph::load_edge_list(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
  }

  SUBCASE("malformed line reports its number") {
    std::istringstream in("1 2\nonly_one_token\n");
    CHECK_THROWS_WITH_AS(Graph::load_edge_list(in),
                         doctest::Contains("line 2"), ParseError);
  }

  SUBCASE("three tokens are malformed too") {
    std::istringstream in("1 2 3\n");
    CHECK_THROWS_AS(Graph::load_edge_list(in), ParseError);
  }
}

TEST_CASE("adjacency invariants") {
  Graph g = testutil::bowtie();
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    degree_sum += g.degree(v);
    CHECK(g.degree(v) == g.neighbors(v).size());
    for (NodeId u : g.neighbors(v)) {
      CHECK(g.has_edge(u, v));
      CHECK(g.has_edge(v, u));
      CHECK(u != v);
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("permuted edge list keeps the degree multiset") {
  std::istringstream first("a b\nb c\nc d\nd a\na c\n");
  std::istringstream second("c d\na c\nd a\nb c\na b\n");
  Graph g1 = Graph::load_edge_list(first);
  Graph g2 = Graph::load_edge_list(second);
  CHECK(g1.edge_count() == g2.edge_count());
  std::map<std::string, std::size_t> by_label_1, by_label_2;
  for (NodeId v = 0; v < g1.node_count(); ++v) by_label_1[g1.label(v)] = g1.degree(v);
  for (NodeId v = 0; v < g2.node_count(); ++v) by_label_2[g2.label(v)] = g2.degree(v);
  CHECK(by_label_1 == by_label_2);
}

TEST_CASE("triangle counts on named graphs") {
  SUBCASE("single triangle") {
    Graph k3 = testutil::triangle();
    CHECK(k3.triangles(0, NodeSet{1, 2}) == 1);
    CHECK(k3.triangles(0, NodeSet{1}) == 0);
  }

  SUBCASE("K4 from brute force") {
    Graph k4 = testutil::complete(4);
    CHECK(k4.triangles(0, NodeSet{1, 2, 3}) == 3);
    CHECK(k4.node_triangles(0) == 3);
  }

  SUBCASE("partner counts") {
    Graph k3 = testutil::triangle();
    CHECK(k3.triangle_partners(0, NodeSet{1, 2}) == 2);

    Graph p3 = testutil::path(3);
    CHECK(p3.triangle_partners(1, NodeSet{0, 2}) == 0);

    // K4 minus edge (2,3): node 0 still partners with all three.
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(g.triangle_partners(0, NodeSet{1, 2, 3}) == 3);
  }

  SUBCASE("own membership in S is irrelevant") {
    Graph k4 = testutil::complete(4);
    CHECK(k4.triangles(0, NodeSet{0, 1, 2, 3}) == k4.triangles(0, NodeSet{1, 2, 3}));
    CHECK(k4.triangle_partners(0, NodeSet{0, 1, 2, 3}) ==
          k4.triangle_partners(0, NodeSet{1, 2, 3}));
  }
}

TEST_CASE("triangle rate") {
  CHECK(testutil::triangle().triangle_rate() == doctest::Approx(1.0));
  CHECK(testutil::path(6).triangle_rate() == 0.0);
  CHECK(testutil::complete(4).triangle_rate() == doctest::Approx(3.0));
  CHECK_THROWS_AS(Graph(0, {}).triangle_rate(), std::invalid_argument);

  CHECK(testutil::triangle().triangle_count() == 1);
  CHECK(testutil::complete(5).triangle_count() == 10);
  CHECK(testutil::path(6).triangle_count() == 0);
}

TEST_CASE("clustering coefficient") {
  CHECK(testutil::triangle().clustering_coefficient(0) == doctest::Approx(1.0));

  Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(star.clustering_coefficient(0) == 0.0);
  CHECK(star.clustering_coefficient(1) == 0.0);  // degree < 2

  Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(k4_minus.clustering_coefficient(0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("random graphs agree with the cubic oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 3 + rng.below(10);  // up to 12 nodes
    auto edges = oracle::random_graph_edges(n, 0.2 + 0.6 * rng.uniform01(), rng);
    Graph g(n, edges);
    oracle::DenseGraph dense = oracle::DenseGraph::from_edges(n, edges);

    // A random subset plus the full node set.
    std::vector<NodeId> subset;
    for (NodeId v = 0; v < n; ++v) {
      if (rng.uniform01() < 0.5) subset.push_back(v);
    }
    NodeSet s{std::vector<NodeId>(subset)};
    oracle::Community everyone = oracle::all_nodes(dense);

    std::uint64_t rate_numerator = 0;
    for (NodeId v = 0; v < n; ++v) {
      CHECK(g.triangles(v, s) == oracle::triangles_in_set(dense, v, subset));
      CHECK(g.triangle_partners(v, s) == oracle::partners_in_set(dense, v, subset));
      std::size_t t_total = oracle::triangles_in_set(dense, v, everyone);
      std::size_t vt_total = oracle::partners_in_set(dense, v, everyone);
      CHECK(g.node_triangles(v) == t_total);
      CHECK(g.node_triangle_partners(v) == vt_total);
      rate_numerator += t_total;

      // t and vt are monotone under set restriction, and vt <= degree.
      CHECK(g.triangles(v, s) <= g.node_triangles(v));
      CHECK(g.triangle_partners(v, s) <= g.node_triangle_partners(v));
      CHECK(g.node_triangle_partners(v) <= g.degree(v));
    }
    CHECK(g.triangle_rate() ==
          doctest::Approx(static_cast<double>(rate_numerator) / n));
    CHECK(g.triangle_rate() ==
          doctest::Approx(3.0 * oracle::distinct_triangles(dense) / n));
  }
}

TEST_CASE("large graphs use the sorted-adjacency fallback") {
  // 4200 nodes exceeds the dense-row limit; the triangle lives at the end.
  std::size_t n = 4200;
  std::vector<Graph::Edge> edges = {{4197, 4198}, {4198, 4199}, {4197, 4199},
                                    {0, 4197}};
  Graph g(n, edges);
  CHECK(g.node_triangles(4197) == 1);
  CHECK(g.node_triangle_partners(4197) == 2);
  CHECK(g.triangles(4197, NodeSet{4198, 4199}) == 1);
  CHECK(g.triangle_partners(4197, NodeSet{0, 4198}) == 1);
  CHECK(g.clustering_coefficient(4197) == doctest::Approx(1.0 / 3.0));
  CHECK(g.has_edge(0, 4197));
  CHECK(!g.has_edge(0, 4199));
}

TEST_SUITE_END();
