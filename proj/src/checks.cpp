#include "matmeans/checks.hpp"

#include <algorithm>
#include <cmath>

#include "matmeans/eigen.hpp"

namespace matmeans {

namespace {

constexpr double kStripLow = 0.25;
constexpr double kStripHigh = 0.75;
constexpr double kStripSlack = 1e-12;

Matrix spd_power_matrix(const SpdMatrix& a, double t) {
  return matrix_function(a, [t](double x) { return std::pow(x, t); });
}

double real_trace(const std::vector<Matrix>& ms) { return trace_product(ms).real(); }

double kappa_pair(const SpdMatrix& a, const SpdMatrix& b) {
  return condition_number(a) + condition_number(b);
}

/// sum over eigenvalues of log(1 + lambda)
double log_det_id_plus(const SpdMatrix& a) {
  double s = 0.0;
  for (double lambda : a.eigen().values) s += std::log1p(lambda);
  return s;
}

CheckResult from_majorization(std::string check_id, MajorizationReport report) {
  CheckResult result;
  result.check_id = std::move(check_id);
  const size_t worst = static_cast<size_t>(report.worst_index);
  result.lhs = report.left_prefix[worst];
  result.rhs = report.right_prefix[worst];
  result.margin = report.margin[worst];
  result.tolerance = report.slack[worst];
  result.verdict = report.verdict;
  result.detail = std::move(report);
  return result;
}

}  // namespace

double check_tolerance(double lhs, double rhs, double kappa_sum) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return (1e-9 + 1e-9 * kappa_sum) * scale;
}

double det_check_tolerance(int n, double lhs_log, double rhs_log) {
  return 1e-9 * n * (1.0 + std::abs(lhs_log) + std::abs(rhs_log));
}

Verdict classify(double lhs, double rhs, double tolerance) {
  if (std::abs(lhs - rhs) <= tolerance) return Verdict::EqualityWithinTol;
  if (lhs > rhs + tolerance) return Verdict::Violated;
  return Verdict::Holds;
}

CheckResult check_pnorm_heron(const SpdMatrix& a, const SpdMatrix& b, double t, double r,
                              double p) {
  if (!(r >= 0.0)) fail(ErrorCode::ROutOfRange, "r must be nonnegative");
  const SpdMatrix sharp_t = geometric_mean_t(a, b, t);
  const SpdMatrix sharp_1t = geometric_mean_t(a, b, 1.0 - t);
  const Matrix sum = a.matrix() + b.matrix();
  const Matrix lhs_mat = sum + r * (sharp_t.matrix() + sharp_1t.matrix());
  const HeinzProducts heinz = heinz_products(a, b, t);
  const Matrix rhs_mat = sum + r * heinz.exponent_swapped;

  CheckResult result;
  result.check_id = "pnorm_heron";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.inputs.r = r;
  result.inputs.p = p;
  result.lhs = schatten_norm(lhs_mat, p);
  result.rhs = schatten_norm(rhs_mat, p);
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(a, b));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_log_maj_proposition(const SpdMatrix& a, const SpdMatrix& b, double t,
                                      PropositionRhs rhs_form) {
  const Matrix a_sqrt = matrix_function(a, [](double x) { return std::sqrt(x); });
  const SpdMatrix lhs_mat = SpdMatrix::from_matrix(
      congruence(geometric_mean_t(a, b, t).matrix(), a_sqrt));
  const double outer = rhs_form == PropositionRhs::Standard ? 1.0 - 0.5 * t : 1.0 - t;
  const Matrix a_outer = spd_power_matrix(a, outer);
  const SpdMatrix rhs_mat =
      SpdMatrix::from_matrix(congruence(spd_power_matrix(b, t), a_outer));

  CheckResult result = from_majorization(
      "log_maj_proposition",
      log_majorization(lhs_mat.eigen().values, rhs_mat.eigen().values, MajKind::Log));
  result.inputs.n = a.dim();
  result.inputs.t = t;
  return result;
}

CheckResult check_trace_sharp(const SpdMatrix& a, const SpdMatrix& b, double t) {
  CheckResult result;
  result.check_id = "trace_sharp";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = real_trace({a.matrix(), geometric_mean_t(a, b, t).matrix()});
  result.rhs = real_trace({spd_power_matrix(a, 2.0 - t), spd_power_matrix(b, t)});
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(a, b));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_strip_trace(const SpdMatrix& x, const SpdMatrix& y, Complex z) {
  if (z.real() < kStripLow - kStripSlack || z.real() > kStripHigh + kStripSlack)
    fail(ErrorCode::ZOutOfStrip, "Re(z) = " + std::to_string(z.real()) + " outside [1/4, 3/4]");
  require_same_dim(x.matrix(), y.matrix());
  const Matrix x_sqrt = matrix_function(x, [](double v) { return std::sqrt(v); });
  const Matrix y_z = complex_power(y, z);
  const Matrix y_1z = complex_power(y, Complex(1.0, 0.0) - z);

  CheckResult result;
  result.check_id = "strip_trace";
  result.inputs.n = x.dim();
  result.inputs.z = z;
  result.lhs = std::abs(trace_product({x_sqrt, y_z, x_sqrt, y_1z}));
  result.rhs = real_trace({x.matrix(), y.matrix()});
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(x, y));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_heinz_sharp_trace(const SpdMatrix& a, const SpdMatrix& b, double t) {
  CheckResult result;
  result.check_id = "heinz_sharp_trace";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = real_trace(
      {geometric_mean_t(a, b, t).matrix(), geometric_mean_t(a, b, 1.0 - t).matrix()});
  result.rhs = real_trace({a.matrix(), b.matrix()});
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(a, b));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_sharp_square_traces(const SpdMatrix& a, const SpdMatrix& b, double t) {
  const Matrix gt = geometric_mean_t(a, b, t).matrix();
  const Matrix g1t = geometric_mean_t(a, b, 1.0 - t).matrix();

  CheckResult result;
  result.check_id = "sharp_square_traces";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = real_trace({gt, gt}) + real_trace({g1t, g1t});
  result.rhs = real_trace({spd_power_matrix(a, 2.0 * t), spd_power_matrix(b, 2.0 * (1.0 - t))}) +
               real_trace({spd_power_matrix(b, 2.0 * t), spd_power_matrix(a, 2.0 * (1.0 - t))});
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(a, b));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_cross_traces(const SpdMatrix& a, const SpdMatrix& b, double t) {
  const Matrix sharp_sum =
      geometric_mean_t(a, b, t).matrix() + geometric_mean_t(a, b, 1.0 - t).matrix();

  CheckResult result;
  result.check_id = "cross_traces";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = real_trace({a.matrix() + b.matrix(), sharp_sum});
  result.rhs = real_trace({spd_power_matrix(a, 1.0 + t), spd_power_matrix(b, 1.0 - t)}) +
               real_trace({spd_power_matrix(a, 2.0 - t), spd_power_matrix(b, t)}) +
               real_trace({spd_power_matrix(a, t), spd_power_matrix(b, 2.0 - t)}) +
               real_trace({spd_power_matrix(a, 1.0 - t), spd_power_matrix(b, 1.0 + t)});
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(a, b));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_furuta_implication(const SpdMatrix& a, const SpdMatrix& b, double t) {
  if (!(t > 0.0 && t < 1.0))
    fail(ErrorCode::TOutOfRange, "t = " + std::to_string(t) + " outside (0, 1)");
  require_same_dim(a.matrix(), b.matrix());
  const double kappa_sum = kappa_pair(a, b);

  const Matrix premise_gap = spd_power_matrix(b, t) - spd_power_matrix(a, t - 2.0);
  const double premise_top = hermitian_eigen(premise_gap).values.front();
  const double premise_scale =
      std::max({std::pow(b.max_eig(), t), std::pow(a.min_eig(), t - 2.0), 1.0});
  if (premise_top > (1e-9 + 1e-9 * kappa_sum) * premise_scale)
    fail(ErrorCode::PremiseViolated,
         "lambda_max(B^t - A^{t-2}) = " + std::to_string(premise_top));

  const SpdMatrix inner = SpdMatrix::from_matrix(congruence(
      b.matrix(), matrix_function(a, [](double x) { return 1.0 / std::sqrt(x); })));
  const Matrix conclusion_gap = spd_power_matrix(inner, t) - spd_power_matrix(a, -2.0);

  CheckResult result;
  result.check_id = "furuta_implication";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = hermitian_eigen(conclusion_gap).values.front();
  result.rhs = 0.0;
  result.margin = -result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_sum);
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_det_audenaert(const SpdMatrix& a, const SpdMatrix& b, double t) {
  const SpdMatrix sharp = geometric_mean_t(a, b, t);
  // det(I + A^{1-t} B^t) = det(I + B^{t/2} A^{1-t} B^{t/2}): similar matrices
  // share the characteristic polynomial, and the symmetrized form is SPD.
  const SpdMatrix rhs_mat = SpdMatrix::from_matrix(
      congruence(spd_power_matrix(a, 1.0 - t), spd_power_matrix(b, 0.5 * t)));

  CheckResult result;
  result.check_id = "det_audenaert";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = log_det_id_plus(sharp);
  result.rhs = log_det_id_plus(rhs_mat);
  result.margin = result.rhs - result.lhs;
  result.tolerance = det_check_tolerance(a.dim(), result.lhs, result.rhs);
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult check_det_power_mean(const SpdMatrix& a, const SpdMatrix& b, double t) {
  if (!(t > 0.0 && t <= 1.0))
    fail(ErrorCode::TOutOfRange, "t = " + std::to_string(t) + " outside (0, 1]");
  const SpdMatrix p = power_mean_closed(a, b, t);
  const SpdMatrix q = q_mean({a, b}, t);

  CheckResult result;
  result.check_id = "det_power_mean";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = log_det(p);
  result.rhs = log_det(q);
  result.margin = result.rhs - result.lhs;
  result.tolerance = det_check_tolerance(a.dim(), result.lhs, result.rhs);
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);

  // Araki-Lieb-Thirring between the inner spectra: for t in (0, 1] the powers
  // taken inside are log-majorized by the power taken outside, with exact
  // determinant equality. This is the relation that decides which way the
  // det(P_t) vs det(Q_t) comparison can go.
  const Matrix a_minus_t_half = spd_power_matrix(a, -0.5 * t);
  const SpdMatrix inner_q = SpdMatrix::from_matrix(
      congruence(spd_power_matrix(b, t), a_minus_t_half));
  const SpdMatrix inner_m = SpdMatrix::from_matrix(congruence(
      b.matrix(), matrix_function(a, [](double x) { return 1.0 / std::sqrt(x); })));
  std::vector<double> m_t_values = inner_m.eigen().values;
  for (double& v : m_t_values) v = std::pow(v, t);
  result.detail = log_majorization(inner_q.eigen().values, m_t_values, MajKind::Log);
  return result;
}

CheckResult check_qnorm_infinity(const std::vector<SpdMatrix>& as, double t) {
  if (as.size() < 2) fail(ErrorCode::LengthMismatch, "need at least two matrices");
  const SpdMatrix p = as.size() == 2 ? power_mean_closed(as[0], as[1], t)
                                     : power_mean_fixed_point(as, t);
  const SpdMatrix q = q_mean(as, t);
  double kappa_sum = 0.0;
  for (const SpdMatrix& a : as) kappa_sum += condition_number(a);

  CheckResult result;
  result.check_id = "qnorm_infinity";
  result.inputs.n = as.front().dim();
  result.inputs.t = t;
  result.inputs.m = static_cast<int>(as.size());
  result.inputs.p = kSchattenInf;
  result.lhs = p.max_eig();
  result.rhs = q.max_eig();
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_sum);
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  return result;
}

CheckResult conjugation_weak_majorization(const Matrix& x, const Matrix& y,
                                          const SpdMatrix& z) {
  require_same_dim(x, y);
  require_same_dim(x, z.matrix());
  const Matrix z_sqrt = matrix_function(z, [](double v) { return std::sqrt(v); });
  const std::vector<double> s_left = singular_values(congruence(x, z_sqrt));
  const std::vector<double> s_right = singular_values(congruence(y, z_sqrt));

  CheckResult result =
      from_majorization("counterexample", log_majorization(s_left, s_right, MajKind::Weak));
  result.inputs.n = x.dim();
  result.inputs.m = 3;
  return result;
}

std::vector<Matrix> counterexample_inputs(CounterexampleCase which) {
  const Matrix x = Matrix::identity(2);
  const Matrix y = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  Matrix z = Matrix::diagonal({1.0, 4.0});
  if (which == CounterexampleCase::PrintedValuesZ) z = Matrix::diagonal({1.0, 2.0});
  if (which == CounterexampleCase::IdentityZ) z = Matrix::identity(2);
  return {x, y, z};
}

CheckResult reproduce_counterexample(CounterexampleCase which) {
  const std::vector<Matrix> inputs = counterexample_inputs(which);
  CheckResult result = conjugation_weak_majorization(
      inputs[0], inputs[1], SpdMatrix::from_matrix(inputs[2]));
  result.inputs.seed = static_cast<uint64_t>(which);
  return result;
}

CheckResult explore_open_th122(const SpdMatrix& a, const SpdMatrix& b, double t) {
  const SpdMatrix left_mean = geometric_mean_t(a, b, t);
  const SpdMatrix right_mean = geometric_mean_t(b, a, t);
  const Complex cross = trace_product({spd_power_matrix(a, t), spd_power_matrix(b, t),
                                       spd_power_matrix(a, 1.0 - t),
                                       spd_power_matrix(b, 1.0 - t)});
  const double trace_ab = real_trace({a.matrix(), b.matrix()});

  CheckResult result;
  result.check_id = "open_th122";
  result.inputs.n = a.dim();
  result.inputs.t = t;
  result.lhs = real_trace({left_mean.matrix(), right_mean.matrix()});
  result.rhs = cross.real();
  result.margin = result.rhs - result.lhs;
  result.tolerance = check_tolerance(result.lhs, result.rhs, kappa_pair(a, b));
  result.verdict = classify(result.lhs, result.rhs, result.tolerance);
  result.bound_margin = std::min(trace_ab - result.lhs, trace_ab - result.rhs);
  return result;
}

}  // namespace matmeans
