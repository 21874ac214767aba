#include <limits>

#include <catch2/catch.hpp>

#include "matmeans/matrix.hpp"
#include "test_helpers.hpp"

using namespace matmeans;
using test_helpers::mat2;

TEST_CASE("matrix construction and access") {
  Matrix m = Matrix::from_rows({{1.0, Complex(2, -1)}, {Complex(2, 1), 4.0}});
  REQUIRE(m.dim() == 2);
  REQUIRE(m(0, 1) == Complex(2, -1));
  REQUIRE(m.hermitian_defect() == 0.0);
  REQUIRE(m.trace() == Complex(5, 0));

  REQUIRE_THROWS_AS(Matrix(-1), Error);
  REQUIRE_THROWS_AS(Matrix::from_rows({{1.0, 2.0}}), Error);
}

TEST_CASE("matrix arithmetic") {
  const Matrix x = mat2(2, 1, 1, 2);
  const Matrix y = mat2(3, 0, 0, 1);
  test_helpers::check_close(x * y, mat2(6, 1, 3, 2), 1e-15);
  test_helpers::check_close(x + y, mat2(5, 1, 1, 3), 1e-15);
  test_helpers::check_close(2.0 * x, mat2(4, 2, 2, 4), 1e-15);
  REQUIRE((x * y).trace().real() == Approx(8.0));

  Matrix bigger(3);
  REQUIRE_THROWS_AS(x * bigger, Error);
}

TEST_CASE("adjoint and hermitian part") {
  const Matrix m = Matrix::from_rows({{1.0, Complex(0, 2)}, {0.0, 1.0}});
  const Matrix adj = m.adjoint();
  REQUIRE(adj(1, 0) == Complex(0, -2));
  REQUIRE(hermitian_part(m).hermitian_defect() == 0.0);
}

TEST_CASE("norms") {
  const Matrix m = mat2(3, 0, 0, 4);
  REQUIRE(m.frobenius_norm() == Approx(5.0));
  REQUIRE(m.max_abs() == Approx(4.0));
}

TEST_CASE("finite detection") {
  Matrix m(2);
  REQUIRE(m.all_finite());
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_FALSE(m.all_finite());
  m(0, 0) = std::numeric_limits<double>::infinity();
  REQUIRE_FALSE(m.all_finite());
}
