#include "prodgraph/graph.hpp"

#include <algorithm>
#include <string>

namespace prodgraph {

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 1)
    throw std::invalid_argument("graph must have at least one vertex");
  n_ = vertex_count;
  words_ = static_cast<std::size_t>((n_ + 63) / 64);
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  adj_.resize(n_);

  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n_ ? u : v) +
                                  " out of range 0.." + std::to_string(n_ - 1));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) continue;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace prodgraph
