#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "prodgraph/graph.hpp"

namespace prodgraph {

/// Hop distances from a single source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Exact all-pairs hop distances of a connected graph. Throws
/// std::invalid_argument("graph is not connected") on disconnected input;
/// the matrix never carries an infinity sentinel.
Eigen::MatrixXi all_pairs_distances(const Graph& g);

/// Maximal connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct BipartiteCheck {
  bool bipartite = false;
  /// When not bipartite: a closed walk of odd length, as a vertex sequence
  /// whose first and last entries coincide.
  std::vector<int> odd_closed_walk;
};

/// Two-colorability, per component.
BipartiteCheck bipartite_check(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartite_check(g).bipartite; }

/// Max entry of the distance matrix. Throws on disconnected input.
int diameter(const Graph& g);

/// Nondecreasing vertex degrees.
std::vector<int> degree_sequence(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

struct TransmissionProfile {
  std::vector<int> transmissions;  // row sums of the distance matrix
  bool regular = false;            // all transmissions equal
  int common_value = 0;            // meaningful only when regular
};

/// Per-vertex distance sums of a connected graph. Throws on disconnected
/// input.
TransmissionProfile transmission_profile(const Graph& g);

/// Returns the cycle length n iff g is connected, 2-regular and n >= 3.
std::optional<int> detect_cycle_graph(const Graph& g);

}  // namespace prodgraph
