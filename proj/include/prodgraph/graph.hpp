#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace prodgraph {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held twice: sorted neighbor lists (BFS, degree scans) and a
/// packed symmetric bit relation (O(1) edge queries in product constructors
/// and isomorphism search).
class Graph {
 public:
  /// Builds a graph from an unordered edge list. Edges are deduplicated and
  /// the symmetric closure is applied. Throws std::invalid_argument on
  /// n < 1, an out-of-range endpoint, or a self-loop.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Dense 0/1 adjacency matrix.
  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n_, n_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u]) a(u, v) = Scalar(1);
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::size_t words_ = 0;  // 64-bit words per adjacency row
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

inline Graph from_edge_list(int vertex_count, std::span<const Edge> edges) {
  return Graph(vertex_count, edges);
}

}  // namespace prodgraph
