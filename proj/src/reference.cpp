#include "prodgraph/reference.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace prodgraph::reference {

Eigen::VectorXd circulant_eigenvalues(const std::vector<double>& first_row) {
  const int n = static_cast<int>(first_row.size());
  if (n == 0) throw std::invalid_argument("empty circulant row");
  for (int j = 1; j < n; ++j)
    if (first_row[j] != first_row[n - j])
      throw std::invalid_argument("circulant row must be symmetric");
  Eigen::VectorXd values(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> sum = 0;
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * j * k / n;
      sum += first_row[j] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    values(k) = sum.real();
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

namespace {

// Householder reduction to symmetric tridiagonal form; only the diagonal
// and subdiagonal are kept.
void tridiagonalize(Eigen::MatrixXd a, std::vector<double>& diag,
                    std::vector<double>& subdiag) {
  const int n = static_cast<int>(a.rows());
  for (int k = 0; k + 2 < n; ++k) {
    Eigen::VectorXd x = a.col(k).segment(k + 1, n - k - 1);
    const double norm = x.norm();
    if (norm == 0) continue;
    Eigen::VectorXd v = x;
    v(0) += (x(0) >= 0 ? norm : -norm);
    const double vnorm = v.norm();
    if (vnorm == 0) continue;
    v /= vnorm;
    auto block = a.block(k + 1, k + 1, n - k - 1, n - k - 1);
    // A <- H A H with H = I - 2 v v^T, applied to the trailing block and
    // the pivot column/row.
    Eigen::VectorXd w = block * v;
    const double coef = v.dot(w);
    block -= 2.0 * (w * v.transpose() + v * w.transpose()) -
             4.0 * coef * (v * v.transpose());
    const double alpha = (x(0) >= 0 ? -norm : norm);
    a(k + 1, k) = alpha;
    a(k, k + 1) = alpha;
    for (int i = k + 2; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
  }
  diag.resize(n);
  subdiag.assign(std::max(n - 1, 0), 0.0);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  for (int i = 0; i + 1 < n; ++i) subdiag[i] = a(i + 1, i);
}

}  // namespace

int sturm_count_below(const std::vector<double>& diag,
                      const std::vector<double>& subdiag, double x) {
  // q_i is the ratio of consecutive characteristic polynomials of the
  // leading minors of (T - x I); negatives count eigenvalues below x.
  int count = 0;
  double q = 1.0;
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i) {
    const double off = i > 0 ? subdiag[i - 1] : 0.0;
    double denom = q;
    if (denom == 0) denom = 1e-300;
    q = diag[i] - x - off * off / denom;
    if (q < 0) ++count;
  }
  return count;
}

Eigen::VectorXd bisection_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  std::vector<double> diag, subdiag;
  tridiagonalize(m, diag, subdiag);
  const int n = static_cast<int>(diag.size());

  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    const double spread = (i > 0 ? std::abs(subdiag[i - 1]) : 0.0) +
                          (i + 1 < n ? std::abs(subdiag[i]) : 0.0);
    lo = std::min(lo, diag[i] - spread);
    hi = std::max(hi, diag[i] + spread);
  }
  const double width_tol =
      1e-13 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));

  Eigen::VectorXd values(n);
  for (int k = 0; k < n; ++k) {
    // k-th largest eigenvalue: bisection on "count below" = n - k - 1 ... n.
    double a = lo, b = hi;
    while (b - a > width_tol) {
      const double mid = 0.5 * (a + b);
      if (sturm_count_below(diag, subdiag, mid) >= n - k)
        b = mid;
      else
        a = mid;
    }
    values(k) = 0.5 * (a + b);
  }
  return values;
}

std::optional<VertexBijection> brute_force_isomorphism(const Graph& g1,
                                                       const Graph& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  const int n = g1.order();
  if (n > 8) throw std::invalid_argument("brute force limited to order 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g1.has_edge(u, v) != g2.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return VertexBijection{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace prodgraph::reference
