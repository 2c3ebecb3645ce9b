#include "prodgraph/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace prodgraph {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

Eigen::MatrixXi all_pairs_distances(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXi d(n, n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> row = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      if (row[u] == -1) throw std::invalid_argument("graph is not connected");
      d(v, u) = row[u];
    }
  }
  return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> components;
  std::vector<char> seen(g.order(), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp;
    std::queue<int> frontier;
    frontier.push(root);
    seen[root] = 1;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          frontier.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  std::vector<int> d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == -1; });
}

BipartiteCheck bipartite_check(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          parent[v] = u;
          frontier.push(v);
        } else if (color[v] == color[u]) {
          // Same-color BFS edge: path(root..u) + (u,v) + path(v..root) is a
          // closed odd walk.
          std::vector<int> up, down;
          for (int w = u; w != -1; w = parent[w]) up.push_back(w);
          for (int w = v; w != -1; w = parent[w]) down.push_back(w);
          std::reverse(up.begin(), up.end());
          BipartiteCheck out;
          out.bipartite = false;
          out.odd_closed_walk = std::move(up);
          out.odd_closed_walk.insert(out.odd_closed_walk.end(), down.begin(),
                                     down.end());
          return out;
        }
      }
    }
  }
  return BipartiteCheck{true, {}};
}

int diameter(const Graph& g) { return all_pairs_distances(g).maxCoeff(); }

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

int min_degree(const Graph& g) { return degree_sequence(g).front(); }
int max_degree(const Graph& g) { return degree_sequence(g).back(); }

TransmissionProfile transmission_profile(const Graph& g) {
  Eigen::MatrixXi d = all_pairs_distances(g);
  TransmissionProfile profile;
  profile.transmissions.resize(g.order());
  for (int v = 0; v < g.order(); ++v) profile.transmissions[v] = d.row(v).sum();
  profile.regular = std::all_of(
      profile.transmissions.begin(), profile.transmissions.end(),
      [&](int t) { return t == profile.transmissions.front(); });
  if (profile.regular) profile.common_value = profile.transmissions.front();
  return profile;
}

std::optional<int> detect_cycle_graph(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  return g.order();
}

}  // namespace prodgraph
