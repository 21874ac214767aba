#include "matmeans/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace matmeans {

Matrix::Matrix(int n) : n_(n) {
  if (n <= 0) fail(ErrorCode::DimensionMismatch, "matrix dimension must be positive");
  a_.assign(static_cast<size_t>(n) * n, Complex(0.0, 0.0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& entries) {
  Matrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<size_t>(i)];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::DimensionMismatch, "row length does not match matrix dimension");
    int j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::hermitian_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

bool Matrix::all_finite() const {
  for (const Complex& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
  for (Complex& v : a_) v *= scalar;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs);
  const int n = lhs.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += lik * rhs(k, j);
    }
  return r;
}

Matrix operator*(Complex scalar, Matrix m) { return m *= scalar; }
Matrix operator*(double scalar, Matrix m) { return m *= Complex(scalar, 0.0); }

Matrix hermitian_part(const Matrix& m) {
  const int n = m.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return r;
}

double rel_frobenius_distance(const Matrix& a, const Matrix& b) {
  return (a - b).frobenius_norm() / std::max(b.frobenius_norm(), 1e-300);
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch,
         "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

}  // namespace matmeans
