#include "matmeans/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matmeans {

namespace {

constexpr double kHermitianRelTol = 1e-12;
constexpr double kOffDiagTarget = 1e-14;

double off_diagonal_frobenius(const Matrix& w) {
  const int n = w.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(w(i, j));
  return std::sqrt(s);
}

/// One complex Jacobi rotation zeroing w(p,q). Updates w <- J* w J and v <- v J
/// where J is the identity outside the (p,q) plane and
///   J_pp = c, J_pq = -s, J_qp = s*conj(phase), J_qq = c*conj(phase),
/// with phase = w(p,q)/|w(p,q)|.
void rotate(Matrix& w, Matrix& v, int p, int q) {
  const Complex wpq = w(p, q);
  const double r = std::abs(wpq);
  if (r == 0.0) return;
  const Complex phase = wpq / r;
  const Complex phase_c = std::conj(phase);

  const double a = w(p, p).real();
  const double b = w(q, q).real();
  const double theta = (a - b) / (2.0 * r);
  const double sign = theta >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const int n = w.dim();
  // columns: w <- w J
  for (int i = 0; i < n; ++i) {
    const Complex wip = w(i, p);
    const Complex wiq = w(i, q);
    w(i, p) = c * wip + s * phase_c * wiq;
    w(i, q) = -s * wip + c * phase_c * wiq;
  }
  // rows: w <- J* w
  for (int j = 0; j < n; ++j) {
    const Complex wpj = w(p, j);
    const Complex wqj = w(q, j);
    w(p, j) = c * wpj + s * phase * wqj;
    w(q, j) = -s * wpj + c * phase * wqj;
  }
  // clean the pivot block against roundoff
  w(p, q) = 0.0;
  w(q, p) = 0.0;
  w(p, p) = Complex(w(p, p).real(), 0.0);
  w(q, q) = Complex(w(q, q).real(), 0.0);

  // accumulate eigenvectors: v <- v J
  for (int i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip + s * phase_c * viq;
    v(i, q) = -s * vip + c * phase_c * viq;
  }
}

}  // namespace

Matrix EigenDecomposition::reconstruct() const {
  const int n = vectors.dim();
  Matrix scaled = vectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= values[static_cast<size_t>(j)];
  return scaled * vectors.adjoint();
}

double EigenDecomposition::unitary_defect() const {
  const int n = vectors.dim();
  const Matrix g = vectors.adjoint() * vectors;
  double defect = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex expected = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      col += std::norm(g(i, j) - expected);
    }
    defect = std::max(defect, std::sqrt(col));
  }
  return defect;
}

EigenDecomposition hermitian_eigen(const Matrix& h, int max_sweeps) {
  if (h.dim() == 0) fail(ErrorCode::DimensionMismatch, "empty matrix");
  if (!h.all_finite()) fail(ErrorCode::NonHermitian, "matrix has non-finite entries");
  const double scale = h.max_abs();
  if (h.hermitian_defect() > kHermitianRelTol * std::max(scale, 1e-300) && scale > 0.0)
    fail(ErrorCode::NonHermitian, "hermitian defect exceeds 1e-12 * max|entry|");

  const int n = h.dim();
  Matrix w = hermitian_part(h);
  Matrix v = Matrix::identity(n);
  const double target = kOffDiagTarget * w.frobenius_norm();

  bool converged = off_diagonal_frobenius(w) <= target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(w, v, p, q);
    converged = off_diagonal_frobenius(w) <= target;
  }
  if (!converged)
    fail(ErrorCode::NoConvergence,
         "Jacobi eigensolver did not reach its off-diagonal target in " +
             std::to_string(max_sweeps) + " sweeps");

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return w(i, i).real() > w(j, j).real(); });

  EigenDecomposition eig;
  eig.values.resize(static_cast<size_t>(n));
  eig.vectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<size_t>(j)];
    eig.values[static_cast<size_t>(j)] = w(src, src).real();
    for (int i = 0; i < n; ++i) eig.vectors(i, j) = v(i, src);
  }
  return eig;
}

}  // namespace matmeans
