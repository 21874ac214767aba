#pragma once

#include <catch2/catch.hpp>

#include "matmeans/matrix.hpp"
#include "matmeans/spd.hpp"

namespace test_helpers {

using matmeans::Complex;
using matmeans::Matrix;
using matmeans::SpdMatrix;

inline Matrix mat2(double a, double b, double c, double d) {
  return Matrix::from_rows({{a, b}, {c, d}});
}

inline SpdMatrix spd(const Matrix& m) { return SpdMatrix::from_matrix(m); }

inline SpdMatrix a2() { return spd(mat2(2, 1, 1, 2)); }
inline SpdMatrix b2() { return spd(Matrix::diagonal({3, 1})); }

inline SpdMatrix a3() {
  return spd(Matrix::from_rows({{4, 1, 0}, {1, 3, 1}, {0, 1, 2}}));
}
inline SpdMatrix b3() {
  return spd(Matrix::from_rows({{2, 0, 1}, {0, 2, 0}, {1, 0, 3}}));
}
inline SpdMatrix c3() {
  return spd(Matrix::from_rows({{3, 1, 1}, {1, 4, 0}, {1, 0, 2}}));
}

inline void check_close(const Matrix& got, const Matrix& want, double tol) {
  REQUIRE(got.dim() == want.dim());
  REQUIRE(matmeans::rel_frobenius_distance(got, want) < tol);
}

}  // namespace test_helpers
