#include "matmeans/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "matmeans/eigen.hpp"

namespace matmeans {

namespace {

/// Determinant of a k x k complex submatrix via LU with partial pivoting.
Complex submatrix_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  std::vector<Complex> lu(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) lu[static_cast<size_t>(i) * k + j] = m(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);

  Complex det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    double best = std::abs(lu[static_cast<size_t>(col) * k + col]);
    for (int i = col + 1; i < k; ++i) {
      const double mag = std::abs(lu[static_cast<size_t>(i) * k + col]);
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < k; ++j)
        std::swap(lu[static_cast<size_t>(pivot) * k + j], lu[static_cast<size_t>(col) * k + j]);
      det = -det;
    }
    const Complex d = lu[static_cast<size_t>(col) * k + col];
    det *= d;
    for (int i = col + 1; i < k; ++i) {
      const Complex factor = lu[static_cast<size_t>(i) * k + col] / d;
      lu[static_cast<size_t>(i) * k + col] = factor;
      for (int j = col + 1; j < k; ++j)
        lu[static_cast<size_t>(i) * k + j] -= factor * lu[static_cast<size_t>(col) * k + j];
    }
  }
  return det;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

// Log-domain slack: products over prefixes amplify relative error
// multiplicatively, so the base tolerance is scale-free in the log domain.
// The trailing term tracks eigensolver error on small eigenvalues of an
// ill-conditioned input, which is absolute at the scale of the top eigenvalue
// and therefore costs ~eps * lambda_1/lambda_i of relative accuracy at entry i.
double prefix_slack(double left_prefix, double right_prefix, double spread_sum) {
  return 1e-9 + 1e-9 * (std::abs(left_prefix) + std::abs(right_prefix)) + 1e-14 * spread_sum;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::EqualityWithinTol: return "EQUALITY_WITHIN_TOL";
    case Verdict::Violated: return "VIOLATED";
  }
  return "UNKNOWN";
}

std::vector<double> singular_values(const Matrix& m) {
  const EigenDecomposition eig = hermitian_eigen(hermitian_part(m.adjoint() * m));
  std::vector<double> s(eig.values.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::max(eig.values[i], 0.0));
  return s;
}

double schatten_norm(const Matrix& m, double p) {
  if (std::isnan(p) || (p < 1.0 && p != kSchattenInf))
    fail(ErrorCode::POutOfRange, "Schatten index must be >= 1 or infinity");
  const std::vector<double> s = singular_values(m);
  if (p == kSchattenInf) return s.front();
  const double top = s.front();
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (double x : s) sum += std::pow(x / top, p);
  return top * std::pow(sum, 1.0 / p);
}

Complex trace_product(const std::vector<Matrix>& ms) {
  if (ms.empty()) fail(ErrorCode::DimensionMismatch, "empty product");
  Matrix prod = ms.front();
  for (size_t i = 1; i < ms.size(); ++i) {
    require_same_dim(prod, ms[i]);
    prod = prod * ms[i];
  }
  return prod.trace();
}

double log_det(const SpdMatrix& a) {
  double s = 0.0;
  for (double lambda : a.eigen().values) s += std::log(lambda);
  return s;
}

Matrix compound(const Matrix& m, int k) {
  const int n = m.dim();
  if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "compound order " + std::to_string(k));
  if (k == 1) return m;
  const std::vector<std::vector<int>> subsets = k_subsets(n, k);
  const int dim = static_cast<int>(subsets.size());
  Matrix c(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      c(i, j) = submatrix_det(m, subsets[static_cast<size_t>(i)], subsets[static_cast<size_t>(j)]);
  return c;
}

MajorizationReport log_majorization(const std::vector<double>& u, const std::vector<double>& v,
                                    MajKind kind) {
  if (u.size() != v.size() || u.empty())
    fail(ErrorCode::LengthMismatch,
         "vector lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  if (kind == MajKind::Log)
    for (size_t i = 0; i < u.size(); ++i)
      if (u[i] <= 0.0 || v[i] <= 0.0)
        fail(ErrorCode::NonpositiveForLog, "log majorization requires strictly positive entries");

  MajorizationReport rep;
  rep.kind = kind;
  rep.left = u;
  rep.right = v;
  const size_t n = u.size();
  rep.left_prefix.resize(n);
  rep.right_prefix.resize(n);
  rep.margin.resize(n);
  rep.slack.resize(n);

  double lp = 0.0, rp = 0.0, spread = 0.0;
  for (size_t k = 0; k < n; ++k) {
    if (kind == MajKind::Log) {
      lp += std::log(u[k]);
      rp += std::log(v[k]);
      spread += u.front() / u[k] + v.front() / v[k];
    } else {
      lp += u[k];
      rp += v[k];
      spread += u.front() + v.front();
    }
    rep.left_prefix[k] = lp;
    rep.right_prefix[k] = rp;
    rep.margin[k] = rp - lp;
    rep.slack[k] = prefix_slack(lp, rp, spread);
  }

  bool violated = false;
  bool all_equal = true;
  double worst_headroom = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < n; ++k) {
    if (rep.margin[k] < -rep.slack[k]) violated = true;
    if (std::abs(rep.margin[k]) > rep.slack[k]) all_equal = false;
    const double headroom = rep.margin[k] / std::max(rep.slack[k], 1e-300);
    if (headroom < worst_headroom) {
      worst_headroom = headroom;
      rep.worst_index = static_cast<int>(k);
    }
  }
  rep.final_equality = std::abs(rep.margin[n - 1]) <= rep.slack[n - 1];
  if (kind == MajKind::Log && !rep.final_equality) violated = true;

  rep.verdict = violated  ? Verdict::Violated
                : all_equal ? Verdict::EqualityWithinTol
                            : Verdict::Holds;
  return rep;
}

}  // namespace matmeans
