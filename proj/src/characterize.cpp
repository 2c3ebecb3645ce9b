#include "prodgraph/characterize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "prodgraph/metrics.hpp"

namespace prodgraph {

std::string to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::cart_kron_odd_cycles: return "cart-kron/odd-cycles";
    case DecisionRule::cart_kron_edgeless: return "cart-kron/edgeless";
    case DecisionRule::cart_kron_degree: return "cart-kron/degree";
    case DecisionRule::cart_kron_connectivity: return "cart-kron/connectivity";
    case DecisionRule::cart_kron_eigenvalue: return "cart-kron/eigenvalue";
    case DecisionRule::cart_strong_max_degree: return "cart-strong/max-degree";
    case DecisionRule::cart_lex_max_degree: return "cart-lex/max-degree";
    case DecisionRule::kron_strong_max_degree: return "kron-strong/max-degree";
    case DecisionRule::kron_lex_max_degree: return "kron-lex/max-degree";
    case DecisionRule::strong_lex_complete: return "strong-lex/complete-h";
    case DecisionRule::strong_lex_min_degree: return "strong-lex/min-degree";
  }
  return "?";
}

namespace {

bool is_complete(const Graph& g) {
  return 2 * g.edge_count() == g.order() * (g.order() - 1);
}

// Vertices of a cycle graph in traversal order, starting at 0.
std::vector<int> cycle_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.order());
  int prev = -1, cur = 0;
  for (int step = 0; step < g.order(); ++step) {
    order.push_back(cur);
    const auto nbrs = g.neighbors(cur);
    const int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return order;
}

// The explicit pair map conjugated by the factors' cyclic labelings, so it
// applies to equal odd cycles however their vertices are numbered. For
// canonically labeled cycles this reduces to f_n_map.
VertexBijection conjugated_pair_map(const Graph& g, const Graph& h, int n) {
  const std::vector<int> sigma_g = cycle_order(g);
  const std::vector<int> sigma_h = cycle_order(h);
  std::vector<int> pos_g(n), pos_h(n);
  for (int i = 0; i < n; ++i) {
    pos_g[sigma_g[i]] = i;
    pos_h[sigma_h[i]] = i;
  }
  VertexBijection phi;
  phi.forward.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int l = pos_g[x], m = pos_h[y];
      phi.forward[x * n + y] =
          sigma_g[(l + m) % n] * n + sigma_h[(m - l + n) % n];
    }
  return phi;
}

// Smallest adjacency eigenvalue of C_n: 2 cos(2 pi floor(n/2) / n).
double cycle_smallest_eigenvalue(int n) {
  return 2.0 * std::cos(2.0 * std::numbers::pi * (n / 2) / n);
}

Decision verified_map(DecisionRule rule, ProductKind kindA, ProductKind kindB,
                      const Graph& g, const Graph& h, VertexBijection map) {
  ProductGraph a = build_product(kindA, g, h);
  ProductGraph b = build_product(kindB, g, h);
  if (!verify_isomorphism(a.graph, b.graph, map).ok)
    throw std::logic_error("explicit certificate failed verification");
  return Decision{true, rule, ExplicitMap{std::move(map)}};
}

Decision decide_cart_kron(const Graph& g, const Graph& h) {
  if (g.order() == 1 && h.order() == 1)
    return verified_map(DecisionRule::cart_kron_edgeless,
                        ProductKind::cartesian, ProductKind::kronecker, g, h,
                        VertexBijection::identity(1));

  const auto cg = detect_cycle_graph(g);
  const auto ch = detect_cycle_graph(h);
  if (cg && ch && *cg == *ch && *cg % 2 == 1)
    return verified_map(DecisionRule::cart_kron_odd_cycles,
                        ProductKind::cartesian, ProductKind::kronecker, g, h,
                        conjugated_pair_map(g, h, *cg));

  // Obstructions in proof order: degrees, then connectivity, then the
  // smallest adjacency eigenvalue.
  const int min_sum = min_degree(g) + min_degree(h);
  const int min_prod = min_degree(g) * min_degree(h);
  if (min_sum != min_prod)
    return Decision{false, DecisionRule::cart_kron_degree,
                    DegreeObstruction{DegreeObstruction::Which::min, min_sum,
                                      min_prod}};
  const int max_sum = max_degree(g) + max_degree(h);
  const int max_prod = max_degree(g) * max_degree(h);
  if (max_sum != max_prod)
    return Decision{false, DecisionRule::cart_kron_degree,
                    DegreeObstruction{DegreeObstruction::Which::max, max_sum,
                                      max_prod}};

  // All four extreme degrees equal 2, so both factors are cycles.
  if (*cg % 2 == 0 && *ch % 2 == 0)
    return Decision{false, DecisionRule::cart_kron_connectivity,
                    ConnectivityObstruction{1, 2}};

  // Cycles, not both even, not equal odd: the Cartesian product's smallest
  // eigenvalue lmin_G + lmin_H avoids {2 lmin_G, 2 lmin_H}.
  const double lg = cycle_smallest_eigenvalue(*cg);
  const double lh = cycle_smallest_eigenvalue(*ch);
  return Decision{
      false, DecisionRule::cart_kron_eigenvalue,
      EigenvalueObstruction{lg + lh, 2.0 * std::min(lg, lh), {2.0 * lg, 2.0 * lh}}};
}

Decision degree_obstruction_decision(DecisionRule rule, int value_a,
                                     int value_b,
                                     DegreeObstruction::Which which) {
  if (value_a == value_b)
    throw std::logic_error("obstruction degrees unexpectedly equal");
  return Decision{false, rule, DegreeObstruction{which, value_a, value_b}};
}

Decision decide_strong_lex(const Graph& g, const Graph& h) {
  if (is_complete(h))
    return verified_map(DecisionRule::strong_lex_complete, ProductKind::strong,
                        ProductKind::lexicographic, g, h,
                        VertexBijection::identity(g.order() * h.order()));
  return degree_obstruction_decision(
      DecisionRule::strong_lex_min_degree,
      (min_degree(g) + 1) * (min_degree(h) + 1) - 1,
      h.order() * min_degree(g) + min_degree(h),
      DegreeObstruction::Which::min);
}

}  // namespace

Decision decide(ProductKind kindA, ProductKind kindB, const Graph& g,
                const Graph& h) {
  if (kindA == kindB) throw std::invalid_argument("product kinds must differ");
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument("factors must be connected");

  // Normalize so kindA precedes kindB in enum order; all six
  // characterizations are symmetric in the pair, only certificate value
  // order would flip.
  if (static_cast<int>(kindA) > static_cast<int>(kindB)) std::swap(kindA, kindB);

  const bool cart_kron = kindA == ProductKind::cartesian &&
                         kindB == ProductKind::kronecker;
  if (!cart_kron && (g.order() < 2 || h.order() < 2))
    throw std::invalid_argument(
        "this pair's characterization requires factors with at least two "
        "vertices");

  if (cart_kron) return decide_cart_kron(g, h);

  const int dg = max_degree(g), dh = max_degree(h);
  if (kindA == ProductKind::cartesian && kindB == ProductKind::strong)
    return degree_obstruction_decision(DecisionRule::cart_strong_max_degree,
                                       dg + dh, (dg + 1) * (dh + 1) - 1,
                                       DegreeObstruction::Which::max);
  if (kindA == ProductKind::cartesian && kindB == ProductKind::lexicographic)
    return degree_obstruction_decision(DecisionRule::cart_lex_max_degree,
                                       dg + dh, h.order() * dg + dh,
                                       DegreeObstruction::Which::max);
  if (kindA == ProductKind::kronecker && kindB == ProductKind::strong)
    return degree_obstruction_decision(DecisionRule::kron_strong_max_degree,
                                       dg * dh, (dg + 1) * (dh + 1) - 1,
                                       DegreeObstruction::Which::max);
  if (kindA == ProductKind::kronecker && kindB == ProductKind::lexicographic)
    return degree_obstruction_decision(DecisionRule::kron_lex_max_degree,
                                       dg * dh, h.order() * dg + dh,
                                       DegreeObstruction::Which::max);
  return decide_strong_lex(g, h);
}

CrossValidation cross_validate(ProductKind kindA, ProductKind kindB,
                               const Graph& g, const Graph& h,
                               std::uint64_t node_budget) {
  const auto start = std::chrono::steady_clock::now();
  CrossValidation report;
  report.decision = decide(kindA, kindB, g, h);

  ProductGraph a = build_product(kindA, g, h);
  ProductGraph b = build_product(kindB, g, h);
  report.search = find_isomorphism(a.graph, b.graph, node_budget);
  report.validated = !report.search.budget_exceeded;
  if (report.validated) {
    report.agree = report.search.found() == report.decision.isomorphic;
    if (!report.agree)
      throw std::logic_error(
          "decision engine disagrees with the exhaustive search on " +
          to_string(kindA) + " vs " + to_string(kindB));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace prodgraph
