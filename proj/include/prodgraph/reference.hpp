#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "prodgraph/graph.hpp"
#include "prodgraph/iso.hpp"

namespace prodgraph::reference {

// Independent reference routes used to cross-check the main implementations.
// Nothing here calls the Jacobi solver or the backtracking search, and
// nothing in the main modules calls back into this header.

/// Eigenvalues of the circulant matrix with the given first row, by the
/// discrete Fourier closed form, sorted nonincreasing. The row must be
/// symmetric (row[j] == row[n-j]) so the spectrum is real.
Eigen::VectorXd circulant_eigenvalues(const std::vector<double>& first_row);

/// Eigenvalues of a real symmetric matrix by Householder tridiagonalization
/// followed by bisection on Sturm-sequence sign counts (the signs of the
/// characteristic polynomials of the leading principal minors). Sorted
/// nonincreasing; each eigenvalue is located to about 1e-12 * scale.
Eigen::VectorXd bisection_eigenvalues(const Eigen::MatrixXd& m);

/// Number of eigenvalues of the tridiagonal matrix (diag, subdiag) that are
/// strictly below x.
int sturm_count_below(const std::vector<double>& diag,
                      const std::vector<double>& subdiag, double x);

/// Isomorphism by scanning all order! vertex permutations. Intended for
/// orders <= 8.
std::optional<VertexBijection> brute_force_isomorphism(const Graph& g1,
                                                       const Graph& g2);

}  // namespace prodgraph::reference
