#pragma once

#include <vector>

#include <Eigen/Core>

#include "prodgraph/graph.hpp"
#include "prodgraph/products.hpp"

namespace prodgraph {

/// Absolute clustering tolerance. Separations in every spectrum this
/// library produces at desk scale exceed 1e-3, so 1e-6 splits them cleanly.
inline constexpr double kDefaultSpectralTol = 1e-6;

/// A real eigenvalue multiset: the raw values in nonincreasing order plus a
/// single-linkage clustering of them at an absolute tolerance.
struct Spectrum {
  Eigen::VectorXd values;                         // nonincreasing
  std::vector<std::pair<double, int>> clusters;   // (representative, multiplicity)
  double tol = kDefaultSpectralTol;

  int order() const { return static_cast<int>(values.size()); }
  int distinct_count() const { return static_cast<int>(clusters.size()); }
  double largest() const { return values(0); }
  double smallest() const { return values(values.size() - 1); }

  /// Multiplicity of the cluster containing `value`, 0 if none is within tol.
  int multiplicity_of(double value) const;
};

/// Eigenvalues of a real symmetric matrix (in-house Jacobi solver), sorted
/// nonincreasing. Throws on non-symmetric (beyond 1e-12) or NaN input.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m);

/// Single-linkage clustering of the values with gap threshold tol.
/// Adjacent sorted values closer than or equal to tol join one cluster;
/// representatives are cluster means. Throws if tol <= 0 or a cluster grows
/// wider than tol around its representative (cannot happen for the
/// well-separated spectra this library targets).
Spectrum cluster(Eigen::VectorXd values, double tol = kDefaultSpectralTol);

/// Closed form {2 cos(2 pi k / n) : k = 1..n} for the cycle C_n, n >= 3.
Spectrum cycle_adjacency_spectrum(int n, double tol = kDefaultSpectralTol);

Spectrum adjacency_spectrum(const Graph& g, double tol = kDefaultSpectralTol);

/// Distance-matrix spectrum; throws on disconnected input.
Spectrum distance_spectrum(const Graph& g, double tol = kDefaultSpectralTol);

/// Composition rule for adjacency spectra: Cartesian products take all
/// pairwise sums, Kronecker products all pairwise products. Other kinds
/// have no closed form and throw.
Spectrum product_adjacency_spectrum(ProductKind kind, const Spectrum& sg,
                                    const Spectrum& sh,
                                    double tol = kDefaultSpectralTol);

/// Distance spectrum of the Cartesian product of transmission-regular
/// factors: G on m vertices with transmission s, H on n vertices with
/// transmission t. Yields {n*s + m*t} + {n*mu_i : i=2..m} + {m*eta_j :
/// j=2..n} + {0 with multiplicity (m-1)(n-1)}. The given spectra must start
/// with their Perron values s and t.
Spectrum cartesian_distance_spectrum_tr(const Spectrum& sg, const Spectrum& sh,
                                        int m, int n, int s, int t,
                                        double tol = kDefaultSpectralTol);

/// Distance spectrum of C_n (x) C_n for odd n: with distance eigenvalues
/// l_1 > l_2 >= ... >= l_n of C_n, returns {2n*l_1} + {n*l_i twice :
/// i=2..n} + {0 with multiplicity (n-1)^2}. Throws for even n.
Spectrum kronecker_cycle_distance_spectrum(int n,
                                           double tol = kDefaultSpectralTol);

/// Largest |a_i - b_i| over the sorted value lists; infinity on size
/// mismatch. Spectra are compared this way rather than cluster-by-cluster.
double max_elementwise_gap(const Spectrum& a, const Spectrum& b);

}  // namespace prodgraph
