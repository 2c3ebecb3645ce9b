#include "prodgraph/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "prodgraph/families.hpp"
#include "prodgraph/metrics.hpp"

namespace prodgraph {

const std::vector<NamedGraph>& named_corpus() {
  static const std::vector<NamedGraph> corpus = [] {
    std::vector<NamedGraph> graphs;
    graphs.push_back({"K1", complete_graph(1)});
    graphs.push_back({"K2", complete_graph(2)});
    graphs.push_back({"P3", path_graph(3)});
    graphs.push_back({"P4", path_graph(4)});
    graphs.push_back({"P5", path_graph(5)});
    graphs.push_back({"C3", cycle_graph(3)});
    graphs.push_back({"C4", cycle_graph(4)});
    graphs.push_back({"C5", cycle_graph(5)});
    graphs.push_back({"C6", cycle_graph(6)});
    graphs.push_back({"C7", cycle_graph(7)});
    graphs.push_back({"C8", cycle_graph(8)});
    graphs.push_back({"K4", complete_graph(4)});
    graphs.push_back({"K5", complete_graph(5)});
    graphs.push_back({"star4", star_graph(4)});
    graphs.push_back({"K23", complete_bipartite_graph(2, 3)});
    graphs.push_back({"paw", Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})});
    graphs.push_back({"diamond", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
    graphs.push_back({"bull", Graph(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}})});
    graphs.push_back({"cube", hypercube_graph(3)});
    graphs.push_back({"2K2", disjoint_union(complete_graph(2), complete_graph(2))});
    graphs.push_back({"K1+C3", disjoint_union(complete_graph(1), cycle_graph(3))});
    return graphs;
  }();
  return corpus;
}

namespace {

using Mask = unsigned long long;

Mask edge_bit(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  // Position of (u, v) in the row-wise upper triangle.
  int index = 0;
  for (int row = 0; row < u; ++row) index += n - row - 1;
  index += v - u - 1;
  return Mask{1} << index;
}

bool mask_connected(Mask mask, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask & edge_bit(u, v, n)) parent[find(u)] = find(v);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

Mask canonical_mask(Mask mask, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mask best = ~Mask{0};
  do {
    Mask relabeled = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (mask & edge_bit(u, v, n))
          relabeled |= edge_bit(perm[u], perm[v], n);
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to(int max_order) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("enumeration supported for orders 1..7");
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_order; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<Mask> seen;
    for (Mask mask = 0; mask < (Mask{1} << pairs); ++mask) {
      if (!mask_connected(mask, n)) continue;
      if (!seen.insert(canonical_mask(mask, n)).second) continue;
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (mask & edge_bit(u, v, n)) edges.emplace_back(u, v);
      graphs.emplace_back(n, edges);
    }
  }
  return graphs;
}

std::vector<NamedGraph> cart_kron_sweep_corpus() {
  std::vector<NamedGraph> corpus;
  int counter = 0;
  for (Graph& g : connected_graphs_up_to(5)) {
    corpus.push_back({"g" + std::to_string(counter++) + "_n" +
                          std::to_string(g.order()),
                      std::move(g)});
  }
  for (int n = 6; n <= 9; ++n)
    corpus.push_back({"C" + std::to_string(n), cycle_graph(n)});
  return corpus;
}

}  // namespace prodgraph
