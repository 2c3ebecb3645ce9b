#pragma once

#include "prodgraph/graph.hpp"

namespace prodgraph {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite_graph(int a, int b);
Graph hypercube_graph(int dim);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace prodgraph
