#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matmeans/means.hpp"
#include "matmeans/spectral.hpp"

namespace matmeans {

/// Everything needed to replay one check execution.
struct TrialSpec {
  int n = 0;
  double t = 0.0;
  double s = 0.0;
  double r = 0.0;
  double p = 0.0;  // Schatten index; kSchattenInf for the sup norm
  Complex z{0.0, 0.0};
  uint64_t seed = 0;
  double condition_target = 0.0;
  int m = 2;  // number of input matrices
};

struct CheckResult {
  std::string check_id;
  TrialSpec inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;     // rhs - lhs (log-domain for determinant checks)
  double tolerance = 0.0;
  Verdict verdict = Verdict::Holds;
  std::optional<MajorizationReport> detail;
  /// Extra hard-bound margin where a check carries one (open_th122: the
  /// min over both sides of Tr(AB) - side).
  std::optional<double> bound_margin;
};

/// tau = (1e-9 + 1e-9 * kappa_sum) * max(|lhs|, |rhs|, 1): conditioning
/// amplifies eigensolver error.
double check_tolerance(double lhs, double rhs, double kappa_sum);
/// Determinant checks compare in the log domain with scale-free slack.
double det_check_tolerance(int n, double lhs_log, double rhs_log);
Verdict classify(double lhs, double rhs, double tolerance);

/// || A+B + r(A#_t B + A#_{1-t} B) ||_p  vs  || A+B + r(A^t B^{1-t} + A^{1-t} B^t) ||_p
CheckResult check_pnorm_heron(const SpdMatrix& a, const SpdMatrix& b, double t, double r,
                              double p);

enum class PropositionRhs {
  Standard,      // A^{1-t/2} B^t A^{1-t/2} — satisfies the k=n equality leg
  IntroVariant,  // A^{1-t} B^t A^{1-t} — fails it whenever det(A) != 1
};

/// lambda(A^{1/2} (A#_t B) A^{1/2}) prec_log lambda(rhs form)
CheckResult check_log_maj_proposition(const SpdMatrix& a, const SpdMatrix& b, double t,
                                      PropositionRhs rhs_form = PropositionRhs::Standard);

/// Tr(A (A#_t B)) <= Tr(A^{2-t} B^t)
CheckResult check_trace_sharp(const SpdMatrix& a, const SpdMatrix& b, double t);

/// |Tr(X^{1/2} Y^z X^{1/2} Y^{1-z})| <= Tr(XY) on the strip Re(z) in [1/4, 3/4]
CheckResult check_strip_trace(const SpdMatrix& x, const SpdMatrix& y, Complex z);

/// Tr((A#_t B)(A#_{1-t} B)) <= Tr(AB)
CheckResult check_heinz_sharp_trace(const SpdMatrix& a, const SpdMatrix& b, double t);

/// Tr((A#_t B)^2 + (A#_{1-t} B)^2) <= Tr(A^{2t} B^{2(1-t)} + B^{2t} A^{2(1-t)})
CheckResult check_sharp_square_traces(const SpdMatrix& a, const SpdMatrix& b, double t);

/// Tr((A+B)(A#_t B + A#_{1-t} B)) <=
///   Tr(A^{1+t} B^{1-t} + A^{2-t} B^t + A^t B^{2-t} + A^{1-t} B^{1+t})
CheckResult check_cross_traces(const SpdMatrix& a, const SpdMatrix& b, double t);

/// B^t <= A^{t-2}  ==>  (A^{-1/2} B A^{-1/2})^t <= A^{-2}. Inputs must satisfy
/// the premise (PREMISE_VIOLATED otherwise); lhs is the largest eigenvalue of
/// the conclusion difference, rhs is 0.
CheckResult check_furuta_implication(const SpdMatrix& a, const SpdMatrix& b, double t);

/// det(I + A#_t B) <= det(I + A^{1-t} B^t), compared in the log domain; the
/// right side is evaluated as det(I + B^{t/2} A^{1-t} B^{t/2}).
CheckResult check_det_audenaert(const SpdMatrix& a, const SpdMatrix& b, double t);

/// det(P_t(A,B)) <= det(Q_t(A,B)) in the log domain. The detail report
/// carries the Araki-Lieb-Thirring relation between the inner spectra,
/// lambda(A^{-t/2} B^t A^{-t/2}) prec_log lambda((A^{-1/2} B A^{-1/2})^t),
/// which fixes the direction this comparison can actually take.
CheckResult check_det_power_mean(const SpdMatrix& a, const SpdMatrix& b, double t);

/// ||P_t(A_1..A_m)||_inf <= ||Q_t(A_1..A_m)||_inf; fixed-point solver for m > 2.
CheckResult check_qnorm_infinity(const std::vector<SpdMatrix>& as, double t);

/// Weak-majorization comparison s(Z^{1/2} X Z^{1/2}) prec_w s(Z^{1/2} Y Z^{1/2});
/// the general operation behind the counterexample reproduction and replay.
CheckResult conjugation_weak_majorization(const Matrix& x, const Matrix& y, const SpdMatrix& z);

enum class CounterexampleCase {
  PaperZ = 0,          // Z = diag(1, 4): s-values (4,1) vs (2,2)
  PrintedValuesZ = 1,  // Z = diag(1, 2): s-values (2,1) vs (sqrt2, sqrt2)
  IdentityZ = 2,       // Z = I: trivially holds, s(X) = s(Y) = (1,1)
};

/// Fixed-input refutation of "0 <= X, Y <= Z and s(X) = s(Y) imply
/// Z^{1/2} X Z^{1/2} prec_w Z^{1/2} Y Z^{1/2}".
CheckResult reproduce_counterexample(CounterexampleCase which = CounterexampleCase::PaperZ);
/// Fixed inputs of a counterexample case, in order X, Y, Z.
std::vector<Matrix> counterexample_inputs(CounterexampleCase which);

/// Open question: Tr((A#_t B)(B#_t A)) <= Re Tr(A^t B^t A^{1-t} B^{1-t}).
/// The verdict is reported but never gates; both sides are additionally
/// asserted <= Tr(AB) through bound_margin.
CheckResult explore_open_th122(const SpdMatrix& a, const SpdMatrix& b, double t);

}  // namespace matmeans
