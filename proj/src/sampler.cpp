#include "matmeans/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace matmeans {

namespace {

constexpr double kFurutaGapFraction = 0.5;   // keep A^{t-2} - E above this fraction of its floor
constexpr double kFurutaConditionBound = 1e6;  // cap on the condition number of the derived B

std::vector<double> sample_spectrum(int n, double kappa, CounterRng& rng, bool cluster_bottom) {
  const double half_log = 0.5 * std::log(kappa);
  std::vector<double> values(static_cast<size_t>(n), 1.0);
  if (n >= 2) {
    values[0] = std::exp(half_log);
    values[1] = std::exp(-half_log);
    for (int i = 2; i < n; ++i) {
      const double u = rng.next_double();
      // ill-conditioned stress cases pile the free eigenvalues onto the
      // bottom decade of the log range
      const double x = cluster_bottom ? -half_log * (1.0 - 0.1 * u) : (2.0 * u - 1.0) * half_log;
      values[static_cast<size_t>(i)] = std::exp(x);
    }
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

SpdMatrix conjugated_spd(const Matrix& unitary, const std::vector<double>& spectrum) {
  const int n = unitary.dim();
  Matrix scaled = unitary;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= spectrum[static_cast<size_t>(j)];
  return SpdMatrix::from_matrix(hermitian_part(scaled * unitary.adjoint()));
}

}  // namespace

void SamplerConfig::validate() const {
  if (n < 1 || n > 16) fail(ErrorCode::ConfigInvalid, "dimension " + std::to_string(n));
  if (!(condition_target >= 1.0))
    fail(ErrorCode::ConfigInvalid, "condition target must be >= 1");
  if (structure == SampleStructure::FurutaPremise && !(t > 0.0 && t < 1.0))
    fail(ErrorCode::ConfigInvalid, "Furuta premise requires t in (0, 1)");
}

Matrix random_unitary(int n, CounterRng& rng) {
  Matrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();

  // Gram-Schmidt on columns, run twice for orthogonality at machine precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
      }
      double norm = 0.0;
      for (int i = 0; i < n; ++i) norm += std::norm(g(i, j));
      norm = std::sqrt(norm);
      for (int i = 0; i < n; ++i) g(i, j) /= norm;
    }
  }
  // sign convention: first nonzero entry of each column made real positive,
  // so the draw is stable across generator implementations
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(g(i, j));
      if (mag > 1e-300) {
        const Complex phase = std::conj(g(i, j)) / mag;
        for (int r = 0; r < n; ++r) g(r, j) *= phase;
        break;
      }
    }
  }
  return g;
}

SpdMatrix random_spd(const SamplerConfig& config) {
  config.validate();
  CounterRng rng(config.seed);
  const Matrix u = random_unitary(config.n, rng);
  const std::vector<double> spectrum =
      sample_spectrum(config.n, config.condition_target, rng,
                      config.structure == SampleStructure::IllConditioned);
  return conjugated_spd(u, spectrum);
}

std::pair<SpdMatrix, SpdMatrix> random_furuta_pair(const SamplerConfig& config, double t) {
  SamplerConfig base = config;
  base.structure = SampleStructure::FurutaPremise;
  base.t = t;
  base.validate();

  // B = (A^{t-2} - E)^{1/t} blows up as kappa(A)^{(2-t)/t}; keep kappa(B)
  // below kFurutaConditionBound by capping the condition target of A.
  const double kappa_cap =
      std::pow(kFurutaGapFraction * std::pow(kFurutaConditionBound, t), 1.0 / (2.0 - t));
  SamplerConfig a_config = config;
  a_config.structure = SampleStructure::Generic;
  a_config.condition_target = std::clamp(config.condition_target, 1.0, kappa_cap);
  a_config.seed = derive_seed(config.seed, 0);
  const SpdMatrix a = random_spd(a_config);

  const SpdMatrix a_pow = real_power(a, t - 2.0);

  CounterRng rng(derive_seed(config.seed, 1));
  const int n = config.n;
  Matrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
  const SpdMatrix gram = SpdMatrix::from_matrix(
      hermitian_part(g.adjoint() * g) + 1e-8 * Matrix::identity(n));
  const Matrix contraction = (1.0 / gram.max_eig()) * gram.matrix();
  double scale = rng.next_double() * (1.0 - kFurutaGapFraction) * a_pow.min_eig();

  for (int attempt = 0; attempt < 4; ++attempt) {
    const Matrix core = a_pow.matrix() - scale * contraction;
    try {
      const SpdMatrix core_spd = SpdMatrix::from_matrix(core);
      if (core_spd.min_eig() < 1e-6) {
        scale *= 0.5;
        continue;
      }
      return {a, real_power(core_spd, 1.0 / t)};
    } catch (const Error&) {
      scale *= 0.5;
    }
  }
  fail(ErrorCode::ConstructionFailed, "could not keep A^{t-2} - E positive definite");
}

std::pair<SpdMatrix, SpdMatrix> random_commuting_pair(const SamplerConfig& config) {
  config.validate();
  CounterRng rng(config.seed);
  const Matrix u = random_unitary(config.n, rng);
  const std::vector<double> first = sample_spectrum(config.n, config.condition_target, rng, false);
  const std::vector<double> second = sample_spectrum(config.n, config.condition_target, rng, false);
  return {conjugated_spd(u, first), conjugated_spd(u, second)};
}

}  // namespace matmeans
