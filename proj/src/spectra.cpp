#include "prodgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "prodgraph/families.hpp"
#include "prodgraph/jacobi.hpp"
#include "prodgraph/metrics.hpp"

namespace prodgraph {

int Spectrum::multiplicity_of(double value) const {
  for (const auto& [rep, mult] : clusters)
    if (std::abs(rep - value) <= tol) return mult;
  return 0;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  return jacobi_eigenvalues(m);
}

Spectrum cluster(Eigen::VectorXd values, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  std::sort(values.begin(), values.end(), std::greater<double>());
  Spectrum spectrum;
  spectrum.tol = tol;
  spectrum.values = values;
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values(i - 1) - values(i) <= tol) continue;
    const Eigen::Index count = i - begin;
    const double rep = values.segment(begin, count).mean();
    for (Eigen::Index k = begin; k < i; ++k)
      if (std::abs(values(k) - rep) > tol)
        throw std::invalid_argument(
            "clustering tolerance too coarse: chained cluster wider than tol");
    spectrum.clusters.emplace_back(rep, static_cast<int>(count));
    begin = i;
  }
  return spectrum;
}

Spectrum cycle_adjacency_spectrum(int n, double tol) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Eigen::VectorXd values(n);
  for (int k = 1; k <= n; ++k)
    values(k - 1) = 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
  return cluster(std::move(values), tol);
}

Spectrum adjacency_spectrum(const Graph& g, double tol) {
  return cluster(symmetric_eigenvalues(g.adjacency_matrix()), tol);
}

Spectrum distance_spectrum(const Graph& g, double tol) {
  Eigen::MatrixXd d = all_pairs_distances(g).cast<double>();
  return cluster(symmetric_eigenvalues(d), tol);
}

Spectrum product_adjacency_spectrum(ProductKind kind, const Spectrum& sg,
                                    const Spectrum& sh, double tol) {
  if (kind != ProductKind::cartesian && kind != ProductKind::kronecker)
    throw std::invalid_argument(
        "adjacency spectrum composition is only defined for the Cartesian "
        "and Kronecker products");
  Eigen::VectorXd values(sg.values.size() * sh.values.size());
  Eigen::Index k = 0;
  for (double a : sg.values)
    for (double b : sh.values)
      values(k++) = kind == ProductKind::cartesian ? a + b : a * b;
  return cluster(std::move(values), tol);
}

Spectrum cartesian_distance_spectrum_tr(const Spectrum& sg, const Spectrum& sh,
                                        int m, int n, int s, int t,
                                        double tol) {
  if (sg.order() != m || sh.order() != n)
    throw std::invalid_argument("factor spectrum order mismatch");
  if (std::abs(sg.largest() - s) > tol || std::abs(sh.largest() - t) > tol)
    throw std::invalid_argument(
        "factor spectrum does not start with its transmission: factor is not "
        "transmission regular");
  Eigen::VectorXd values(static_cast<Eigen::Index>(m) * n);
  Eigen::Index k = 0;
  values(k++) = double(n) * s + double(m) * t;
  for (int i = 1; i < m; ++i) values(k++) = n * sg.values(i);
  for (int j = 1; j < n; ++j) values(k++) = m * sh.values(j);
  for (int z = 0; z < (m - 1) * (n - 1); ++z) values(k++) = 0.0;
  return cluster(std::move(values), tol);
}

Spectrum kronecker_cycle_distance_spectrum(int n, double tol) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(
        "defined for odd cycles only: the product of two even cycles is "
        "disconnected");
  Spectrum base = distance_spectrum(cycle_graph(n), tol);
  Eigen::VectorXd values(static_cast<Eigen::Index>(n) * n);
  Eigen::Index k = 0;
  values(k++) = 2.0 * n * base.values(0);
  for (int i = 1; i < n; ++i) {  // whole multiset, repetitions included
    values(k++) = n * base.values(i);
    values(k++) = n * base.values(i);
  }
  for (int z = 0; z < (n - 1) * (n - 1); ++z) values(k++) = 0.0;
  return cluster(std::move(values), tol);
}

double max_elementwise_gap(const Spectrum& a, const Spectrum& b) {
  if (a.values.size() != b.values.size())
    return std::numeric_limits<double>::infinity();
  if (a.values.size() == 0) return 0.0;
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

}  // namespace prodgraph
