#pragma once

#include <string>
#include <variant>
#include <vector>

#include "prodgraph/graph.hpp"
#include "prodgraph/iso.hpp"
#include "prodgraph/products.hpp"

namespace prodgraph {

/// Which rule decided a product-pair comparison.
enum class DecisionRule {
  cart_kron_odd_cycles,    // both factors the same odd cycle: explicit map
  cart_kron_edgeless,      // both factors are K_1: both products edgeless
  cart_kron_degree,        // min or max degrees of the products differ
  cart_kron_connectivity,  // connected versus two components
  cart_kron_eigenvalue,    // smallest adjacency eigenvalues differ
  cart_strong_max_degree,
  cart_lex_max_degree,
  kron_strong_max_degree,
  kron_lex_max_degree,
  strong_lex_complete,     // H complete: the two edge sets coincide
  strong_lex_min_degree,
};

std::string to_string(DecisionRule rule);

struct ExplicitMap {
  VertexBijection map;
};
struct DegreeObstruction {
  enum class Which { min, max };
  Which which;
  int value_a = 0;  // degree of the first product
  int value_b = 0;  // degree of the second product, always different
};
struct ConnectivityObstruction {
  int components_a = 0;
  int components_b = 0;
};
struct EigenvalueObstruction {
  double smallest_a = 0;  // smallest adjacency eigenvalue, first product
  double smallest_b = 0;  // smallest adjacency eigenvalue, second product
  std::vector<double> candidates_b;  // the set {2*lmin_G, 2*lmin_H}
};
struct OrderObstruction {
  int h_order = 0;  // the |V(H)| the hypothesis contradicts
};
struct SearchResult {
  SearchOutcome outcome;
};

using IsoCertificate =
    std::variant<ExplicitMap, DegreeObstruction, ConnectivityObstruction,
                 EigenvalueObstruction, OrderObstruction, SearchResult>;

struct Decision {
  bool isomorphic = false;
  DecisionRule rule;
  IsoCertificate certificate;
};

/// Decides whether kindA(g, h) and kindB(g, h) are isomorphic, with a
/// certificate: an explicit verified bijection on yes, a named recheckable
/// obstruction on no. Factors must be connected; every pair except
/// Cartesian-vs-Kronecker additionally requires both factors to have at
/// least two vertices. Throws std::invalid_argument when a hypothesis
/// fails.
Decision decide(ProductKind kindA, ProductKind kindB, const Graph& g,
                const Graph& h);

struct CrossValidation {
  Decision decision;
  SearchOutcome search;
  bool validated = false;  // false iff the search ran out of budget
  bool agree = false;      // meaningful only when validated
  double elapsed_ms = 0;
};

/// Builds both products, runs the brute-force search, and checks it against
/// decide. Disagreement on a completed search throws std::logic_error; a
/// budget timeout reports validated = false, never a disagreement.
CrossValidation cross_validate(ProductKind kindA, ProductKind kindB,
                               const Graph& g, const Graph& h,
                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace prodgraph
