#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "prodgraph/families.hpp"
#include "prodgraph/iso.hpp"
#include "prodgraph/metrics.hpp"
#include "prodgraph/products.hpp"
#include "prodgraph/reference.hpp"

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

Graph permuted(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

}  // namespace

TEST_CASE("pair map fixed points and values") {
  VertexBijection f3 = f_n_map(3);
  CHECK(f3.is_permutation());
  CHECK(f3(0) == 0);            // (0,0) -> (0,0)
  CHECK(f3(1 * 3 + 2) == 0 * 3 + 1);  // (1,2) -> (0,1)

  CHECK_THROWS_AS(f_n_map(4), std::invalid_argument);
  CHECK_THROWS_AS(f_n_map(2), std::invalid_argument);
}

TEST_CASE("pair map is an isomorphism for odd n") {
  for (int n = 3; n <= 13; n += 2) {
    ProductGraph cart = cartesian_product(cycle_graph(n), cycle_graph(n));
    ProductGraph kron = kronecker_product(cycle_graph(n), cycle_graph(n));
    CHECK(cart.graph.edge_count() == 2 * n * n);
    CHECK(verify_isomorphism(cart.graph, kron.graph, f_n_map(n)).ok);
  }
}

TEST_CASE("verify_isomorphism") {
  const Graph c5 = cycle_graph(5);
  CHECK(verify_isomorphism(c5, c5, VertexBijection::identity(5)).ok);

  ProductGraph cart = cartesian_product(c5, c5);
  ProductGraph kron = kronecker_product(c5, c5);
  VerifyResult mismatch = verify_isomorphism(cart.graph, kron.graph,
                                             VertexBijection::identity(25));
  CHECK_FALSE(mismatch.ok);
  const auto [u, v] = mismatch.failing_pair;
  CHECK(cart.graph.has_edge(u, v) != kron.graph.has_edge(u, v));

  CHECK_THROWS_AS(
      verify_isomorphism(c5, cycle_graph(6), VertexBijection::identity(5)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      verify_isomorphism(c5, c5, VertexBijection{{0, 0, 1, 2, 3}}),
      std::invalid_argument);
}

TEST_CASE("find_isomorphism basic decisions") {
  // connectivity differs
  SearchOutcome two_triangles = find_isomorphism(
      cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)));
  CHECK(two_triangles.certified_non_isomorphic());

  // even cycles: cartesian connected, kronecker split
  SearchOutcome c4 = find_isomorphism(
      cartesian_product(cycle_graph(4), cycle_graph(4)).graph,
      kronecker_product(cycle_graph(4), cycle_graph(4)).graph);
  CHECK(c4.certified_non_isomorphic());

  SearchOutcome c5 = find_isomorphism(
      cartesian_product(cycle_graph(5), cycle_graph(5)).graph,
      kronecker_product(cycle_graph(5), cycle_graph(5)).graph);
  CHECK(c5.found());
}

TEST_CASE("find_isomorphism is symmetric in its arguments") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    Graph a = random_graph(rng, n, 0.45);
    Graph b = trial % 2 == 0 ? permuted(a, rng) : random_graph(rng, n, 0.45);
    CHECK(find_isomorphism(a, b).found() == find_isomorphism(b, a).found());
  }
}

TEST_CASE("find_isomorphism against brute-force permutations") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    Graph a = random_graph(rng, n, 0.5);
    Graph b = trial % 3 == 0 ? permuted(a, rng) : random_graph(rng, n, 0.5);
    const bool expected = reference::brute_force_isomorphism(a, b).has_value();
    SearchOutcome outcome = find_isomorphism(a, b);
    CHECK_FALSE(outcome.budget_exceeded);
    CHECK(outcome.found() == expected);
    if (outcome.found())
      CHECK(verify_isomorphism(a, b, *outcome.bijection).ok);
  }
}

TEST_CASE("search budget is reported distinctly") {
  // with a one-node budget, large symmetric graphs cannot finish
  ProductGraph cart = cartesian_product(cycle_graph(7), cycle_graph(7));
  ProductGraph kron = kronecker_product(cycle_graph(7), cycle_graph(7));
  SearchOutcome starved = find_isomorphism(cart.graph, kron.graph, 1);
  CHECK(starved.budget_exceeded);
  CHECK_FALSE(starved.found());
  CHECK_FALSE(starved.certified_non_isomorphic());
}

TEST_CASE("distance regularity of cycles and complete graphs") {
  DistanceRegularityResult c5 = distance_regularity_check(cycle_graph(5));
  REQUIRE(c5.regular);
  CHECK(c5.array->b == std::vector<int>{2, 1});
  CHECK(c5.array->c == std::vector<int>{1, 1});

  DistanceRegularityResult k4 = distance_regularity_check(complete_graph(4));
  REQUIRE(k4.regular);
  CHECK(k4.array->b == std::vector<int>{3});
  CHECK(k4.array->c == std::vector<int>{1});

  DistanceRegularityResult q3 = distance_regularity_check(hypercube_graph(3));
  REQUIRE(q3.regular);
  CHECK(q3.array->b == std::vector<int>{3, 2, 1});
  CHECK(q3.array->c == std::vector<int>{1, 2, 3});

  DistanceRegularityResult pet = distance_regularity_check(petersen());
  REQUIRE(pet.regular);
  CHECK(pet.array->b == std::vector<int>{3, 2});
  CHECK(pet.array->c == std::vector<int>{1, 1});

  CHECK_THROWS_AS(
      distance_regularity_check(disjoint_union(cycle_graph(3), cycle_graph(3))),
      std::invalid_argument);
}

TEST_CASE("degree-irregular graphs fail with a degree witness") {
  DistanceRegularityResult p3 = distance_regularity_check(path_graph(3));
  CHECK_FALSE(p3.regular);
  REQUIRE(p3.degree_witness.has_value());
  CHECK(p3.degree_witness->deg_u != p3.degree_witness->deg_v);
}

TEST_CASE("cartesian cycle squares are not distance-regular") {
  for (int n : {5, 7, 9}) {
    ProductGraph square = cartesian_product(cycle_graph(n), cycle_graph(n));
    DistanceRegularityResult result = distance_regularity_check(square.graph);
    CHECK_FALSE(result.regular);
    REQUIRE(result.witness.has_value());
    const IntersectionWitness& w = *result.witness;
    CHECK(w.family == 'c');
    CHECK(w.distance == 2);
    CHECK(w.base_z == w.x);
    CHECK(std::min(w.count_y, w.count_z) == 1);
    CHECK(std::max(w.count_y, w.count_z) == 2);

    // recheck the witness from scratch against the distance matrix
    const Eigen::MatrixXi dist = all_pairs_distances(square.graph);
    CHECK(dist(w.x, w.y) == 2);
    CHECK(dist(w.base_z, w.z) == 2);
    auto count_closer = [&](int base, int y) {
      int count = 0;
      for (int u : square.graph.neighbors(y))
        if (dist(base, u) == 1) ++count;
      return count;
    };
    CHECK(count_closer(w.x, w.y) == w.count_y);
    CHECK(count_closer(w.base_z, w.z) == w.count_z);
  }
}

TEST_CASE("reported-regular graphs survive a full independent re-scan") {
  for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(5),
                         hypercube_graph(3), petersen(),
                         complete_bipartite_graph(3, 3)}) {
    DistanceRegularityResult result = distance_regularity_check(g);
    REQUIRE(result.regular);
    const Eigen::MatrixXi dist = all_pairs_distances(g);
    const int diam = dist.maxCoeff();
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) {
        const int i = dist(x, y);
        if (i == 0) continue;
        int c = 0, b = 0;
        for (int u : g.neighbors(y)) {
          if (dist(x, u) == i - 1) ++c;
          if (dist(x, u) == i + 1) ++b;
        }
        CHECK(c == result.array->c[i - 1]);
        if (i < diam) CHECK(b == result.array->b[i]);
      }
  }
}
