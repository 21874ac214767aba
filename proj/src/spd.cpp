#include "matmeans/spd.hpp"

#include <cmath>
#include <string>

namespace matmeans {

namespace {
constexpr double kPositivityFloor = 1e-13;
}

SpdMatrix SpdMatrix::from_matrix(const Matrix& m) {
  EigenDecomposition eig = hermitian_eigen(m);
  const double top = eig.values.front();
  const double bottom = eig.values.back();
  if (top <= 0.0 || bottom <= kPositivityFloor * top)
    fail(ErrorCode::NotPositiveDefinite,
         "smallest eigenvalue " + std::to_string(bottom) + " below floor relative to " +
             std::to_string(top));
  return SpdMatrix(hermitian_part(m), std::move(eig));
}

Matrix matrix_function(const SpdMatrix& a, const std::function<double(double)>& f) {
  const EigenDecomposition& eig = a.eigen();
  const int n = a.dim();
  std::vector<double> mapped(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double y = f(eig.values[static_cast<size_t>(i)]);
    if (!std::isfinite(y))
      fail(ErrorCode::DomainError,
           "scalar map non-finite at eigenvalue " + std::to_string(eig.values[static_cast<size_t>(i)]));
    mapped[static_cast<size_t>(i)] = y;
  }
  Matrix scaled = eig.vectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= mapped[static_cast<size_t>(j)];
  return hermitian_part(scaled * eig.vectors.adjoint());
}

SpdMatrix real_power(const SpdMatrix& a, double t) {
  if (t == 0.0) return SpdMatrix::from_matrix(Matrix::identity(a.dim()));
  if (t == 1.0) return a;
  return SpdMatrix::from_matrix(matrix_function(a, [t](double x) { return std::pow(x, t); }));
}

Matrix complex_power(const SpdMatrix& a, Complex z) {
  const EigenDecomposition& eig = a.eigen();
  const int n = a.dim();
  Matrix scaled = eig.vectors;
  for (int j = 0; j < n; ++j) {
    const Complex w = std::exp(z * std::log(eig.values[static_cast<size_t>(j)]));
    for (int i = 0; i < n; ++i) scaled(i, j) *= w;
  }
  return scaled * eig.vectors.adjoint();
}

Matrix congruence(const Matrix& a, const Matrix& x) {
  require_same_dim(a, x);
  return x.adjoint() * a * x;
}

double condition_number(const SpdMatrix& a) { return a.max_eig() / a.min_eig(); }

}  // namespace matmeans
