#pragma once

#include <string>
#include <vector>

#include "prodgraph/graph.hpp"

namespace prodgraph {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Fixed mixed bag of small graphs (orders 1..8, two of them disconnected)
/// used for exhaustive product sweeps.
const std::vector<NamedGraph>& named_corpus();

/// All connected graphs on 1..max_order vertices, one representative per
/// isomorphism class (canonical form by minimizing the edge bitmask over
/// all vertex permutations). max_order <= 7.
std::vector<Graph> connected_graphs_up_to(int max_order);

/// Connected graphs on up to 5 vertices plus the cycles C_6..C_9.
std::vector<NamedGraph> cart_kron_sweep_corpus();

}  // namespace prodgraph
