#include "prodgraph/products.hpp"

#include <algorithm>

#include "prodgraph/metrics.hpp"

namespace prodgraph {

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::kronecker: return "kronecker";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "?";
}

namespace {

ProductGraph assemble(ProductKind kind, const Graph& g, const Graph& h,
                      std::vector<Edge> edges) {
  return ProductGraph{Graph(g.order() * h.order(), edges), g.order(),
                      h.order(), kind};
}

std::vector<Edge> cartesian_edges(const Graph& g, const Graph& h) {
  const int m = h.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.order()) * h.edge_count() +
                static_cast<std::size_t>(m) * g.edge_count());
  for (int i = 0; i < g.order(); ++i)
    for (const auto& [j, s] : h.edges())
      edges.emplace_back(i * m + j, i * m + s);
  for (const auto& [i, r] : g.edges())
    for (int j = 0; j < m; ++j) edges.emplace_back(i * m + j, r * m + j);
  return edges;
}

std::vector<Edge> kronecker_edges(const Graph& g, const Graph& h) {
  const int m = h.order();
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(g.edge_count()) * h.edge_count());
  for (const auto& [i, r] : g.edges())
    for (const auto& [j, s] : h.edges()) {
      edges.emplace_back(i * m + j, r * m + s);
      edges.emplace_back(i * m + s, r * m + j);
    }
  return edges;
}

}  // namespace

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  return assemble(ProductKind::cartesian, g, h, cartesian_edges(g, h));
}

ProductGraph kronecker_product(const Graph& g, const Graph& h) {
  return assemble(ProductKind::kronecker, g, h, kronecker_edges(g, h));
}

ProductGraph strong_product(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = cartesian_edges(g, h);
  std::vector<Edge> kron = kronecker_edges(g, h);
  edges.insert(edges.end(), kron.begin(), kron.end());
  return assemble(ProductKind::strong, g, h, std::move(edges));
}

ProductGraph lexicographic_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  std::vector<Edge> edges;
  for (const auto& [i, r] : g.edges())
    for (int j = 0; j < m; ++j)
      for (int s = 0; s < m; ++s) edges.emplace_back(i * m + j, r * m + s);
  for (int i = 0; i < g.order(); ++i)
    for (const auto& [j, s] : h.edges())
      edges.emplace_back(i * m + j, i * m + s);
  return assemble(ProductKind::lexicographic, g, h, std::move(edges));
}

ProductGraph build_product(ProductKind kind, const Graph& g, const Graph& h) {
  switch (kind) {
    case ProductKind::cartesian: return cartesian_product(g, h);
    case ProductKind::kronecker: return kronecker_product(g, h);
    case ProductKind::strong: return strong_product(g, h);
    case ProductKind::lexicographic: return lexicographic_product(g, h);
  }
  throw std::invalid_argument("unknown product kind");
}

int expected_degree(ProductKind kind, int deg_g, int deg_h, int h_order) {
  if (deg_g < 0 || deg_h < 0 || h_order < 1)
    throw std::invalid_argument("expected_degree: invalid arguments");
  switch (kind) {
    case ProductKind::cartesian: return deg_g + deg_h;
    case ProductKind::kronecker: return deg_g * deg_h;
    case ProductKind::strong: return (deg_g + 1) * (deg_h + 1) - 1;
    case ProductKind::lexicographic: return h_order * deg_g + deg_h;
  }
  throw std::invalid_argument("unknown product kind");
}

int expected_diameter_kronecker_cycle(int m, const Graph& h) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("first factor must be an odd cycle, m >= 3");
  if (!is_connected(h)) throw std::invalid_argument("graph is not connected");
  const int r = diameter(h);
  if (r < 1) throw std::invalid_argument("second factor needs diameter >= 1");
  if (is_bipartite(h)) return std::max(m, r);
  std::optional<int> n = detect_cycle_graph(h);
  if (!n)  // non-bipartite, not a cycle: no closed form
    throw std::invalid_argument(
        "no diameter formula for a non-bipartite factor that is not an odd cycle");
  if (m == *n) return m - 1;
  if (m > *n) return std::max(*n, (m - 1) / 2);
  return std::max(m, (*n - 1) / 2);
}

}  // namespace prodgraph
