#include "prodgraph/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "prodgraph/metrics.hpp"

namespace prodgraph {

bool VertexBijection::is_permutation() const {
  std::vector<char> seen(forward.size(), 0);
  for (int v : forward) {
    if (v < 0 || v >= static_cast<int>(forward.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

VertexBijection VertexBijection::identity(int n) {
  VertexBijection phi;
  phi.forward.resize(n);
  std::iota(phi.forward.begin(), phi.forward.end(), 0);
  return phi;
}

VertexBijection f_n_map(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(
        "the pair map is a bijection only for odd n >= 3");
  VertexBijection phi;
  phi.forward.resize(n * n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      phi.forward[l * n + m] = ((l + m) % n) * n + ((m - l + n) % n);
  return phi;
}

VerifyResult verify_isomorphism(const Graph& g1, const Graph& g2,
                                const VertexBijection& phi) {
  if (g1.order() != g2.order() || phi.size() != g1.order())
    throw std::invalid_argument("order mismatch");
  if (!phi.is_permutation())
    throw std::invalid_argument("map is not a permutation");
  for (int u = 0; u < g1.order(); ++u)
    for (int v = u + 1; v < g1.order(); ++v)
      if (g1.has_edge(u, v) != g2.has_edge(phi(u), phi(v)))
        return VerifyResult{false, {u, v}};
  return VerifyResult{true, {-1, -1}};
}

namespace {

// Isomorphism-invariant vertex key: degree, sorted neighbor degrees, and the
// histogram of BFS distances (unreachable counted at -1, so component sizes
// participate).
std::vector<std::vector<long>> vertex_keys(const Graph& g) {
  std::vector<std::vector<long>> keys(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<long>& key = keys[v];
    key.push_back(g.degree(v));
    std::vector<long> nbr_degrees;
    for (int u : g.neighbors(v)) nbr_degrees.push_back(g.degree(u));
    std::sort(nbr_degrees.begin(), nbr_degrees.end());
    key.insert(key.end(), nbr_degrees.begin(), nbr_degrees.end());
    key.push_back(-7);  // separator
    std::vector<int> dist = bfs_distances(g, v);
    std::map<int, int> histogram;
    for (int d : dist) ++histogram[d];
    for (const auto& [d, count] : histogram) {
      key.push_back(d);
      key.push_back(count);
    }
  }
  return keys;
}

// Shared color classes for both graphs: initial colors from vertex_keys,
// then iterated refinement by the multiset of neighbor colors. Returns
// false if the color histograms ever disagree (a sound non-isomorphism
// certificate).
bool refine_colors(const Graph& g1, const Graph& g2, std::vector<int>& c1,
                   std::vector<int>& c2) {
  const int n = g1.order();
  {
    std::map<std::vector<long>, int> palette;
    auto k1 = vertex_keys(g1), k2 = vertex_keys(g2);
    for (const auto& k : k1) palette.emplace(k, 0);
    for (const auto& k : k2) palette.emplace(k, 0);
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    c1.resize(n);
    c2.resize(n);
    for (int v = 0; v < n; ++v) c1[v] = palette.at(k1[v]);
    for (int v = 0; v < n; ++v) c2[v] = palette.at(k2[v]);
  }

  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    auto signature = [](const Graph& g, const std::vector<int>& colors,
                        int v) {
      std::vector<int> around;
      for (int u : g.neighbors(v)) around.push_back(colors[u]);
      std::sort(around.begin(), around.end());
      return std::make_pair(colors[v], std::move(around));
    };
    std::vector<std::pair<int, std::vector<int>>> s1(n), s2(n);
    for (int v = 0; v < n; ++v) {
      s1[v] = signature(g1, c1, v);
      s2[v] = signature(g2, c2, v);
      palette.emplace(s1[v], 0);
      palette.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    std::vector<int> n1(n), n2(n);
    for (int v = 0; v < n; ++v) {
      n1[v] = palette.at(s1[v]);
      n2[v] = palette.at(s2[v]);
    }
    bool stable = n1 == c1 && n2 == c2;
    c1 = std::move(n1);
    c2 = std::move(n2);
    if (stable) break;
  }

  std::vector<int> h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  return h1 == h2;
}

struct Matcher {
  const Graph& g1;
  const Graph& g2;
  const std::vector<int>& c1;
  const std::vector<int>& c2;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;
  std::vector<int> order;    // g1 vertices, most-constrained first
  std::vector<int> image;    // g1 -> g2, -1 while unassigned
  std::vector<char> used;    // g2 vertices already taken

  Matcher(const Graph& a, const Graph& b, const std::vector<int>& ca,
          const std::vector<int>& cb, std::uint64_t node_budget)
      : g1(a), g2(b), c1(ca), c2(cb), budget(node_budget) {
    const int n = g1.order();
    image.assign(n, -1);
    used.assign(n, 0);

    // Order vertices so each one (after the first of a component) touches
    // the already-placed prefix: smallest color class first, then by number
    // of placed neighbors.
    std::vector<int> class_size(n, 0);
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++class_size[c1[v]];
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == -1 || count[v] > count[best] ||
            (count[v] == count[best] &&
             class_size[c1[v]] < class_size[c1[best]]))
          best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (int u : g1.neighbors(best)) ++count[u];
    }
  }

  bool extend(int depth) {
    if (depth == static_cast<int>(order.size())) return true;
    const int v = order[depth];
    for (int u = 0; u < g2.order(); ++u) {
      if (used[u] || c2[u] != c1[v]) continue;
      if (++nodes > budget) {
        exhausted_budget = true;
        return false;
      }
      bool consistent = true;
      for (int w : g1.neighbors(v)) {
        if (image[w] != -1 && !g2.has_edge(u, image[w])) {
          consistent = false;
          break;
        }
      }
      if (consistent) {
        // Placed non-neighbors of v must map to non-neighbors of u;
        // degrees within color classes match, so checking that u's placed
        // neighborhood is exactly the image of v's suffices.
        int mapped_nbrs = 0;
        for (int w : g1.neighbors(v))
          if (image[w] != -1) ++mapped_nbrs;
        int mapped_nbrs_u = 0;
        for (int w : g2.neighbors(u))
          if (used[w]) ++mapped_nbrs_u;
        if (mapped_nbrs != mapped_nbrs_u) consistent = false;
      }
      if (!consistent) continue;
      image[v] = u;
      used[u] = 1;
      if (extend(depth + 1)) return true;
      image[v] = -1;
      used[u] = 0;
      if (exhausted_budget) return false;
    }
    return false;
  }
};

}  // namespace

SearchOutcome find_isomorphism(const Graph& g1, const Graph& g2,
                               std::uint64_t node_budget) {
  SearchOutcome outcome;
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
    return outcome;
  std::vector<int> c1, c2;
  if (!refine_colors(g1, g2, c1, c2)) return outcome;

  Matcher matcher(g1, g2, c1, c2, node_budget);
  const bool found = matcher.extend(0);
  outcome.nodes = matcher.nodes;
  outcome.budget_exceeded = matcher.exhausted_budget;
  if (found) {
    VertexBijection phi{matcher.image};
    if (!verify_isomorphism(g1, g2, phi).ok)
      throw std::logic_error("search produced a map that fails verification");
    outcome.bijection = std::move(phi);
  }
  return outcome;
}

namespace {

// Neighbors of y at the given distance from x.
int sphere_neighbor_count(const Graph& g, const Eigen::MatrixXi& dist, int x,
                          int y, int target) {
  int count = 0;
  for (int u : g.neighbors(y))
    if (dist(x, u) == target) ++count;
  return count;
}

}  // namespace

DistanceRegularityResult distance_regularity_check(const Graph& g) {
  DistanceRegularityResult result;
  const Eigen::MatrixXi dist = all_pairs_distances(g);
  const int n = g.order();

  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) {
      result.regular = false;
      result.degree_witness =
          DegreeIrregularity{0, v, g.degree(0), g.degree(v)};
      return result;
    }
  }

  const int diam = dist.maxCoeff();
  IntersectionArray array;
  array.b.assign(diam, -1);
  if (diam > 0) array.b[0] = g.degree(0);
  array.c.assign(diam, -1);  // c[i-1] stores c_i

  // First pair seen at each distance fixes the expected counts; every later
  // pair must agree. For degree-regular graphs any violation shows up with
  // a shared base, but the cross-base case is reported faithfully if it
  // ever occurs.
  std::vector<std::pair<int, int>> first_pair(diam + 1, {-1, -1});
  for (int i = 1; i <= diam; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (dist(x, y) != i) continue;
        const int c = sphere_neighbor_count(g, dist, x, y, i - 1);
        const int b = i < diam ? sphere_neighbor_count(g, dist, x, y, i + 1) : 0;
        if (first_pair[i].first == -1) {
          first_pair[i] = {x, y};
          array.c[i - 1] = c;
          if (i < diam) array.b[i] = b;
          continue;
        }
        const auto [x0, y0] = first_pair[i];
        if (c != array.c[i - 1]) {
          result.regular = false;
          result.witness = IntersectionWitness{x0,  y0, y, x, i, 'c',
                                               array.c[i - 1], c};
          return result;
        }
        if (i < diam && b != array.b[i]) {
          result.regular = false;
          result.witness =
              IntersectionWitness{x0, y0, y, x, i, 'b', array.b[i], b};
          return result;
        }
      }
    }
  }

  result.regular = true;
  result.array = std::move(array);
  return result;
}

}  // namespace prodgraph
