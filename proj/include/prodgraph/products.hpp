#pragma once

#include <string>
#include <utility>

#include "prodgraph/graph.hpp"

namespace prodgraph {

enum class ProductKind { cartesian, kronecker, strong, lexicographic };

std::string to_string(ProductKind kind);

/// A product of two factors with its pair labeling. Vertex (i, j) of the
/// product, 0 <= i < g_order and 0 <= j < h_order, sits at flat index
/// i * h_order + j; the same row-major convention is used for all four kinds.
struct ProductGraph {
  Graph graph;
  int g_order = 0;
  int h_order = 0;
  ProductKind kind = ProductKind::cartesian;

  int index(int i, int j) const { return i * h_order + j; }
  std::pair<int, int> pair_of(int flat) const {
    return {flat / h_order, flat % h_order};
  }
};

/// (i,j) ~ (r,s) iff i = r and j ~ s, or i ~ r and j = s.
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// (i,j) ~ (r,s) iff i ~ r and j ~ s.
ProductGraph kronecker_product(const Graph& g, const Graph& h);

/// Edge set is the union of the Cartesian and Kronecker edge sets.
ProductGraph strong_product(const Graph& g, const Graph& h);

/// (i,j) ~ (r,s) iff i ~ r, or i = r and j ~ s.
ProductGraph lexicographic_product(const Graph& g, const Graph& h);

ProductGraph build_product(ProductKind kind, const Graph& g, const Graph& h);

/// Closed-form degree of a product vertex from its factor degrees.
/// h_order participates only in the lexicographic formula.
int expected_degree(ProductKind kind, int deg_g, int deg_h, int h_order = 1);

/// Closed-form diameter of C_m (x) H for odd m: bipartite H gives
/// max{m, diam H}; an odd cycle H = C_n splits on m versus n. Throws for
/// even m, disconnected H, diam(H) < 1, and non-bipartite H that is not an
/// odd cycle (no closed form).
int expected_diameter_kronecker_cycle(int m, const Graph& h);

}  // namespace prodgraph
