#pragma once

#include <vector>

#include "matmeans/matrix.hpp"

namespace matmeans {

/// Unitary eigenvectors (columns) with real eigenvalues sorted descending.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;

  /// V diag(values) V*
  Matrix reconstruct() const;
  /// max column defect of V*V - I (operator-norm sense)
  double unitary_defect() const;
};

/// Dense Hermitian eigendecomposition via cyclic complex Jacobi rotations.
/// Deterministic for fixed input; adequate to n <= 16. Off-diagonal Frobenius
/// target is 1e-14 * ||H||_F, iteration cap `max_sweeps`.
EigenDecomposition hermitian_eigen(const Matrix& h, int max_sweeps = 100);

}  // namespace matmeans
