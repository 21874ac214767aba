#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "matmeans/error.hpp"

namespace matmeans {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The workhorse value type: results
/// of non-symmetric products (A^t B^{1-t} and friends) live here and carry no
/// definiteness claim.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<double>& entries);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  int dim() const { return n_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  /// max_ij |a_ij - conj(a_ji)|
  double hermitian_defect() const;
  bool all_finite() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scalar);

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex scalar, Matrix m);
Matrix operator*(double scalar, Matrix m);

/// (M + M*)/2
Matrix hermitian_part(const Matrix& m);

/// ||a - b||_F / max(||b||_F, 1e-300)
double rel_frobenius_distance(const Matrix& a, const Matrix& b);

void require_same_dim(const Matrix& a, const Matrix& b);

}  // namespace matmeans
