#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prodgraph/graph.hpp"

namespace prodgraph {

/// A vertex bijection between two graphs of equal order, stored as the
/// forward permutation of 0..N-1.
struct VertexBijection {
  std::vector<int> forward;

  int size() const { return static_cast<int>(forward.size()); }
  int operator()(int v) const { return forward[v]; }
  bool is_permutation() const;
  static VertexBijection identity(int n);
};

/// The explicit isomorphism C_n [] C_n -> C_n (x) C_n for odd n, on the
/// row-major pair labeling: (l, m) |-> ((l + m) mod n, (m - l) mod n).
/// Throws for even n, where the map fails to be injective.
VertexBijection f_n_map(int n);

struct VerifyResult {
  bool ok = false;
  /// First vertex pair whose edge/non-edge status is not preserved.
  std::pair<int, int> failing_pair{-1, -1};
};

/// Checks over all vertex pairs that phi maps edges to edges and non-edges
/// to non-edges. Throws on order mismatch or a non-permutation map.
VerifyResult verify_isomorphism(const Graph& g1, const Graph& g2,
                                const VertexBijection& phi);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchOutcome {
  std::optional<VertexBijection> bijection;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;

  bool found() const { return bijection.has_value(); }
  /// Exhaustive-search-certified non-isomorphism (distinct from a timeout).
  bool certified_non_isomorphic() const {
    return !bijection && !budget_exceeded;
  }
};

/// Backtracking isomorphism search over vertices ordered by a refinement
/// partition built from degree, sorted neighbor degrees, and the per-vertex
/// distance-profile histogram. Every returned bijection has already passed
/// verify_isomorphism. A search that exhausts the node budget reports
/// budget_exceeded instead of claiming non-isomorphism.
SearchOutcome find_isomorphism(const Graph& g1, const Graph& g2,
                               std::uint64_t node_budget = kDefaultNodeBudget);

/// Intersection numbers b_0..b_{d-1} and c_1..c_d of a distance-regular
/// graph.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;
};

/// Two equal-distance vertex pairs with different intersection counts.
/// The first pair is (x, y), the second (base_z, z); base_z == x whenever a
/// same-base witness exists (it always does for degree-regular graphs).
struct IntersectionWitness {
  int x = -1, y = -1, z = -1;
  int base_z = -1;
  int distance = 0;
  char family = 'c';  // 'c': neighbors one step closer, 'b': one step farther
  int count_y = 0;
  int count_z = 0;
};

/// Two vertices of different degree; rules out distance-regularity before
/// any intersection-count scan.
struct DegreeIrregularity {
  int u = -1, v = -1;
  int deg_u = 0, deg_v = 0;
};

struct DistanceRegularityResult {
  bool regular = false;
  std::optional<IntersectionArray> array;          // set when regular
  std::optional<IntersectionWitness> witness;      // intersection-count failure
  std::optional<DegreeIrregularity> degree_witness;  // degree failure
};

/// Decides distance-regularity of a connected graph by exhaustive pair
/// scan; returns the intersection array or the first violation found.
/// Throws on disconnected input.
DistanceRegularityResult distance_regularity_check(const Graph& g);

}  // namespace prodgraph
