#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodgraph/families.hpp"
#include "prodgraph/graph.hpp"
#include "prodgraph/metrics.hpp"
#include "prodgraph/products.hpp"
#include "prodgraph/spectra.hpp"

using namespace prodgraph;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("edge-list construction") {
  Graph k2(2, {{0, 1}});
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(0, 1));
  CHECK(k2.has_edge(1, 0));

  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5 == cycle_graph(5));

  // symmetric duplicate collapses to one edge
  Graph dedup(3, {{0, 1}, {1, 0}});
  CHECK(dedup.edge_count() == 1);
  CHECK(dedup.degree(2) == 0);

  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("all-pairs distances") {
  Eigen::MatrixXi d5 = all_pairs_distances(cycle_graph(5));
  for (int v = 0; v < 5; ++v)
    for (int u = 0; u < 5; ++u) {
      const int gap = std::min((u - v + 5) % 5, (v - u + 5) % 5);
      CHECK(d5(v, u) == gap);
    }

  Eigen::MatrixXi d2 = all_pairs_distances(complete_graph(2));
  CHECK(d2(0, 0) == 0);
  CHECK(d2(0, 1) == 1);
  CHECK(d2(1, 0) == 1);

  CHECK(all_pairs_distances(path_graph(4))(0, 3) == 3);

  CHECK_THROWS_WITH_AS(all_pairs_distances(disjoint_union(complete_graph(2),
                                                          complete_graph(2))),
                       "graph is not connected", std::invalid_argument);
}

TEST_CASE("distance matrix invariants on random connected graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_connected_graph(rng, n, 0.4);
    Eigen::MatrixXi d = all_pairs_distances(g);
    CHECK(d.diagonal().isZero());
    CHECK(d == d.transpose().eval());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (int w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(cycle_graph(5)).size() == 1);
  CHECK(connected_components(cycle_graph(5))[0].size() == 5);

  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(connected_components(two_edges).size() == 2);

  ProductGraph p22 = kronecker_product(path_graph(2), path_graph(2));
  CHECK(connected_components(p22.graph).size() == 2);
}

TEST_CASE("bipartite check with odd-walk witness") {
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK_FALSE(is_bipartite(complete_graph(4)));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.35);
    BipartiteCheck check = bipartite_check(g);
    if (!check.bipartite) {
      const auto& walk = check.odd_closed_walk;
      REQUIRE(walk.size() >= 4);
      CHECK(walk.front() == walk.back());
      CHECK((walk.size() - 1) % 2 == 1);
      for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        CHECK(g.has_edge(walk[i], walk[i + 1]));
    }
  }
}

TEST_CASE("bipartite iff adjacency spectrum symmetric about zero") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
    Graph g = random_graph(rng, n, 0.3);
    Eigen::VectorXd values = adjacency_spectrum(g).values;
    bool symmetric = true;
    for (int i = 0; i < n; ++i)
      if (std::abs(values(i) + values(n - 1 - i)) > 1e-7) symmetric = false;
    CHECK(symmetric == is_bipartite(g));
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(cycle_graph(5)) == 2);
  CHECK(diameter(kronecker_product(cycle_graph(3), cycle_graph(3)).graph) == 2);
  CHECK(diameter(cartesian_product(cycle_graph(5), cycle_graph(5)).graph) == 4);
  CHECK_THROWS_AS(diameter(disjoint_union(complete_graph(1), complete_graph(2))),
                  std::invalid_argument);
}

TEST_CASE("degree sequence") {
  CHECK(degree_sequence(cycle_graph(7)) == std::vector<int>(7, 2));
  CHECK(degree_sequence(path_graph(3)) == std::vector<int>{1, 1, 2});
  CHECK(degree_sequence(complete_graph(4)) == std::vector<int>(4, 3));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.5);
    const auto degrees = degree_sequence(g);
    CHECK(static_cast<int>(degrees.size()) == g.order());
    CHECK(std::is_sorted(degrees.begin(), degrees.end()));
    long sum = 0;
    for (int d : degrees) sum += d;
    CHECK(sum == 2L * g.edge_count());
  }
}

TEST_CASE("transmission profile") {
  TransmissionProfile c5 = transmission_profile(cycle_graph(5));
  CHECK(c5.regular);
  CHECK(c5.common_value == 6);

  TransmissionProfile p3 = transmission_profile(path_graph(3));
  CHECK_FALSE(p3.regular);
  CHECK(p3.transmissions == std::vector<int>{3, 2, 3});

  TransmissionProfile c7 = transmission_profile(cycle_graph(7));
  CHECK(c7.regular);
  CHECK(c7.common_value == 12);

  // closed form for cycles: (n^2 - 1) / 4 odd, n^2 / 4 even
  for (int n = 3; n <= 25; ++n) {
    TransmissionProfile profile = transmission_profile(cycle_graph(n));
    CHECK(profile.regular);
    CHECK(profile.common_value == (n % 2 == 1 ? (n * n - 1) / 4 : n * n / 4));
  }

  CHECK_THROWS_AS(transmission_profile(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("cycle graph detection") {
  CHECK(detect_cycle_graph(cycle_graph(9)) == 9);
  CHECK_FALSE(detect_cycle_graph(path_graph(5)).has_value());
  CHECK_FALSE(
      detect_cycle_graph(disjoint_union(cycle_graph(3), cycle_graph(3)))
          .has_value());
  CHECK_FALSE(detect_cycle_graph(complete_graph(1)).has_value());
  CHECK(detect_cycle_graph(complete_graph(3)) == 3);
}
