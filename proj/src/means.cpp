#include "matmeans/means.hpp"

#include <cmath>
#include <string>

namespace matmeans {

namespace {

constexpr int kFixedPointCap = 500;
constexpr double kStepTol = 1e-12;
constexpr double kResidualTol = 1e-11;

void require_t_unit(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    fail(ErrorCode::TOutOfRange, "t = " + std::to_string(t) + " outside [0, 1]");
}

void require_t_positive_unit(double t) {
  if (!(t > 0.0 && t <= 1.0))
    fail(ErrorCode::TOutOfRange, "t = " + std::to_string(t) + " outside (0, 1]");
}

void require_s_unit(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    fail(ErrorCode::SOutOfRange, "s = " + std::to_string(s) + " outside [0, 1]");
}

Matrix sqrt_of(const SpdMatrix& a) {
  return matrix_function(a, [](double x) { return std::sqrt(x); });
}

Matrix inv_sqrt_of(const SpdMatrix& a) {
  return matrix_function(a, [](double x) { return 1.0 / std::sqrt(x); });
}

/// A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2} for a scalar map f
Matrix geodesic_calculus(const SpdMatrix& a, const SpdMatrix& b,
                         const std::function<double(double)>& f) {
  const Matrix a_sqrt = sqrt_of(a);
  const SpdMatrix inner = SpdMatrix::from_matrix(congruence(b.matrix(), inv_sqrt_of(a)));
  return hermitian_part(congruence(matrix_function(inner, f), a_sqrt));
}

void require_same_dims(const std::vector<SpdMatrix>& as) {
  if (as.size() < 2) fail(ErrorCode::LengthMismatch, "mean needs at least two matrices");
  for (const SpdMatrix& a : as)
    require_same_dim(a.matrix(), as.front().matrix());
}

Matrix arithmetic_mean(const std::vector<SpdMatrix>& as) {
  Matrix sum = as.front().matrix();
  for (size_t i = 1; i < as.size(); ++i) sum += as[i].matrix();
  return (1.0 / static_cast<double>(as.size())) * sum;
}

Matrix mean_of_sharps(const SpdMatrix& x, const std::vector<SpdMatrix>& as, double t) {
  const Matrix x_sqrt = sqrt_of(x);
  const Matrix x_inv_sqrt = inv_sqrt_of(x);
  Matrix sum(x.dim());
  for (const SpdMatrix& a : as) {
    const SpdMatrix inner = SpdMatrix::from_matrix(congruence(a.matrix(), x_inv_sqrt));
    sum += congruence(matrix_function(inner, [t](double v) { return std::pow(v, t); }), x_sqrt);
  }
  return hermitian_part((1.0 / static_cast<double>(as.size())) * sum);
}

}  // namespace

void MeanParams::validate() const {
  require_t_unit(t);
  require_s_unit(s);
  if (!(r >= 0.0)) fail(ErrorCode::ROutOfRange, "r = " + std::to_string(r) + " negative");
}

SpdMatrix geometric_mean_t(const SpdMatrix& a, const SpdMatrix& b, double t) {
  require_t_unit(t);
  require_same_dim(a.matrix(), b.matrix());
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return SpdMatrix::from_matrix(
      geodesic_calculus(a, b, [t](double x) { return std::pow(x, t); }));
}

SpdMatrix power_mean_closed(const SpdMatrix& a, const SpdMatrix& b, double t) {
  require_t_positive_unit(t);
  require_same_dim(a.matrix(), b.matrix());
  return SpdMatrix::from_matrix(geodesic_calculus(
      a, b, [t](double x) { return std::pow(0.5 * (1.0 + std::pow(x, t)), 1.0 / t); }));
}

SpdMatrix power_mean_fixed_point(const std::vector<SpdMatrix>& as, double t) {
  require_t_positive_unit(t);
  require_same_dims(as);

  SpdMatrix x = SpdMatrix::from_matrix(arithmetic_mean(as));
  double step = 0.0;
  for (int iter = 0; iter < kFixedPointCap; ++iter) {
    const Matrix next = mean_of_sharps(x, as, t);
    step = rel_frobenius_distance(next, x.matrix());
    x = SpdMatrix::from_matrix(next);
    if (step < kStepTol) break;
  }
  // The contract is the residual of the defining equation, not the step size;
  // near the noise floor the step can stall just above its threshold.
  const double residual = rel_frobenius_distance(mean_of_sharps(x, as, t), x.matrix());
  if (residual > kResidualTol)
    fail(ErrorCode::NoConvergence,
         "fixed-point residual " + std::to_string(residual) + " after cap (last step " +
             std::to_string(step) + ")");
  return x;
}

SpdMatrix q_mean(const std::vector<SpdMatrix>& as, double t) {
  require_t_positive_unit(t);
  require_same_dims(as);
  Matrix sum(as.front().dim());
  for (const SpdMatrix& a : as)
    sum += matrix_function(a, [t](double x) { return std::pow(x, t); });
  const SpdMatrix base =
      SpdMatrix::from_matrix((1.0 / static_cast<double>(as.size())) * sum);
  return real_power(base, 1.0 / t);
}

SpdMatrix heron_kubo_ando(const SpdMatrix& a, const SpdMatrix& b, double s) {
  require_s_unit(s);
  require_same_dim(a.matrix(), b.matrix());
  const Matrix arithmetic = 0.5 * (a.matrix() + b.matrix());
  if (s == 0.0) return SpdMatrix::from_matrix(arithmetic);
  const SpdMatrix geo = geometric_mean_t(a, b, 0.5);
  return SpdMatrix::from_matrix((1.0 - s) * arithmetic + s * geo.matrix());
}

Matrix heron_naive(const SpdMatrix& a, const SpdMatrix& b, double s, double t) {
  require_s_unit(s);
  require_t_unit(t);
  require_same_dim(a.matrix(), b.matrix());
  const HeinzProducts heinz = heinz_products(a, b, t);
  return (1.0 - s) * (0.5 * (a.matrix() + b.matrix())) + s * (0.5 * heinz.exponent_swapped);
}

HeinzProducts heinz_products(const SpdMatrix& a, const SpdMatrix& b, double t) {
  require_t_unit(t);
  require_same_dim(a.matrix(), b.matrix());
  const Matrix at = matrix_function(a, [t](double x) { return std::pow(x, t); });
  const Matrix a1t = matrix_function(a, [t](double x) { return std::pow(x, 1.0 - t); });
  const Matrix bt = matrix_function(b, [t](double x) { return std::pow(x, t); });
  const Matrix b1t = matrix_function(b, [t](double x) { return std::pow(x, 1.0 - t); });
  HeinzProducts out{at * b1t + a1t * bt, at * b1t + bt * a1t};
  return out;
}

}  // namespace matmeans
