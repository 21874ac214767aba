#pragma once

#include <vector>

#include "matmeans/spd.hpp"

namespace matmeans {

/// Interpolation weight t, Heron weight s, scale r. The two roles the
/// literature overloads onto a single letter are kept apart here: t is always
/// the exponent/geodesic parameter, s the convex-combination weight.
struct MeanParams {
  double t = 0.5;
  double s = 0.5;
  double r = 1.0;
  void validate() const;
};

/// A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}, t in [0,1].
SpdMatrix geometric_mean_t(const SpdMatrix& a, const SpdMatrix& b, double t);

/// Two-matrix power mean through the closed form
/// A^{1/2} ((I + (A^{-1/2} B A^{-1/2})^t)/2)^{1/t} A^{1/2}, t in (0,1].
SpdMatrix power_mean_closed(const SpdMatrix& a, const SpdMatrix& b, double t);

/// Power mean of m >= 2 matrices: the unique SPD solution of
/// X = (1/m) sum_i X #_t A_i, found by Picard iteration from the arithmetic
/// mean. The iteration is a strict contraction in the Thompson metric for
/// t in (0,1].
SpdMatrix power_mean_fixed_point(const std::vector<SpdMatrix>& as, double t);

/// Q_t = ((1/m) sum_i A_i^t)^{1/t}, t in (0,1].
SpdMatrix q_mean(const std::vector<SpdMatrix>& as, double t);

/// (1-s)(A+B)/2 + s (A # B) — the operator-mean form of the Heron family.
SpdMatrix heron_kubo_ando(const SpdMatrix& a, const SpdMatrix& b, double s);

/// (1-s)(A+B)/2 + s (A^t B^{1-t} + A^{1-t} B^t)/2 — not Hermitian in general,
/// so the result is a plain Matrix measured through singular-value
/// functionals.
Matrix heron_naive(const SpdMatrix& a, const SpdMatrix& b, double s, double t);

/// The two symmetrized Heinz-type sums. `exponent_swapped` pairs A^t B^{1-t}
/// with A^{1-t} B^t; `order_swapped` pairs it with B^t A^{1-t}.
struct HeinzProducts {
  Matrix exponent_swapped;  // A^t B^{1-t} + A^{1-t} B^t
  Matrix order_swapped;     // A^t B^{1-t} + B^t A^{1-t}
};
HeinzProducts heinz_products(const SpdMatrix& a, const SpdMatrix& b, double t);

}  // namespace matmeans
