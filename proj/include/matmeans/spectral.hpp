#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "matmeans/matrix.hpp"
#include "matmeans/spd.hpp"

namespace matmeans {

inline constexpr double kSchattenInf = std::numeric_limits<double>::infinity();

enum class Verdict { Holds, EqualityWithinTol, Violated };
const char* to_string(Verdict v) noexcept;

/// Singular values of a general square matrix, descending: eigenvalues of
/// (M*M)^{1/2} with clamping at zero before the square root.
std::vector<double> singular_values(const Matrix& m);

/// (sum s_i^p)^{1/p} for p >= 1, or s_1 for p = kSchattenInf.
double schatten_norm(const Matrix& m, double p);

/// Trace of the ordered product; complex so callers can assert reality.
Complex trace_product(const std::vector<Matrix>& ms);

/// sum log lambda_i — the overflow-free determinant channel.
double log_det(const SpdMatrix& a);

/// k-th compound: C(n,k) x C(n,k) matrix of k x k minors over lexicographically
/// ordered k-subsets of rows/columns.
Matrix compound(const Matrix& m, int k);

enum class MajKind { Log, Weak };

/// Prefix-product (Log) or prefix-sum (Weak) majorization comparison between
/// two descending nonnegative vectors. Log compares in the log domain and
/// additionally requires equality of the full products.
struct MajorizationReport {
  MajKind kind = MajKind::Log;
  std::vector<double> left, right;            // the compared vectors
  std::vector<double> left_prefix, right_prefix;  // log-products or sums
  std::vector<double> margin;                 // right_prefix - left_prefix
  std::vector<double> slack;                  // per-prefix tolerance tau_k
  bool final_equality = false;
  int worst_index = 0;                        // argmin over k of margin/slack headroom
  Verdict verdict = Verdict::Holds;
};

MajorizationReport log_majorization(const std::vector<double>& u, const std::vector<double>& v,
                                    MajKind kind);

}  // namespace matmeans
