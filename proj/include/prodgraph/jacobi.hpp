#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Core>

namespace prodgraph {

/// Eigenvalues of a real symmetric matrix by the cyclic Jacobi method,
/// returned in nonincreasing order.
///
/// Each sweep annihilates every off-diagonal entry above a shrinking
/// threshold with a Givens rotation; convergence is quadratic once the
/// off-diagonal mass is small. Eigenvalues only: rotations are applied to
/// the working copy, no accumulation of eigenvectors.
///
/// Throws std::invalid_argument if the input is not symmetric to 1e-12
/// elementwise or contains NaN.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& input, int max_sweeps = 64) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  Matrix a = input;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("matrix must be square");
  if (!a.allFinite()) throw std::invalid_argument("matrix has NaN or Inf entries");
  if (((a - a.transpose()).cwiseAbs().maxCoeff()) > Scalar(1e-12))
    throw std::invalid_argument("matrix is not symmetric");
  a = ((a + Matrix(a.transpose())) / Scalar(2)).eval();

  const Scalar scale = a.cwiseAbs().maxCoeff();
  if (scale == Scalar(0) || n == 1) {
    Vector d = a.diagonal();
    std::sort(d.begin(), d.end(), std::greater<Scalar>());
    return d;
  }

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Scalar off = Scalar(0);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= Scalar(1e-15) * scale * Scalar(n)) break;

    // Late sweeps rotate everything; early ones skip entries already far
    // below the remaining off-diagonal mass.
    const Scalar threshold =
        sweep < 4 ? Scalar(0.2) * off / Scalar(n * n) : Scalar(0);

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq * apq <= threshold || apq == Scalar(0)) continue;

        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t = Scalar(1) /
                   (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        if (theta < Scalar(0)) t = -t;
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(p, k) = a(k, p);
          a(k, q) = s * akp + c * akq;
          a(q, k) = a(k, q);
        }
      }
    }
  }

  Vector d = a.diagonal();
  std::sort(d.begin(), d.end(), std::greater<Scalar>());
  return d;
}

}  // namespace prodgraph
