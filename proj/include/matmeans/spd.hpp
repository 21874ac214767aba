#pragma once

#include <functional>

#include "matmeans/eigen.hpp"
#include "matmeans/matrix.hpp"

namespace matmeans {

/// Hermitian positive definite matrix with a certified smallest eigenvalue.
/// Construction runs the eigensolver; eigenvalues below 1e-13 * lambda_1 are
/// rejected. Immutable after construction.
class SpdMatrix {
 public:
  static SpdMatrix from_matrix(const Matrix& m);

  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const EigenDecomposition& eigen() const { return eig_; }
  double min_eig() const { return eig_.values.back(); }
  double max_eig() const { return eig_.values.front(); }

 private:
  SpdMatrix(Matrix m, EigenDecomposition eig) : m_(std::move(m)), eig_(std::move(eig)) {}
  Matrix m_;
  EigenDecomposition eig_;
};

/// V diag(f(lambda_i)) V*. DOMAIN_ERROR if f is non-finite at an eigenvalue.
Matrix matrix_function(const SpdMatrix& a, const std::function<double(double)>& f);

/// A^t through the functional calculus; any real t (A is invertible by type).
SpdMatrix real_power(const SpdMatrix& a, double t);

/// A^z = V diag(exp(z log lambda_i)) V*, principal logarithm. Unitary for
/// purely imaginary z.
Matrix complex_power(const SpdMatrix& a, Complex z);

/// X* A X
Matrix congruence(const Matrix& a, const Matrix& x);

/// lambda_1 / lambda_n
double condition_number(const SpdMatrix& a);

}  // namespace matmeans
