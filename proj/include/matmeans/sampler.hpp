#pragma once

#include <cstdint>
#include <utility>

#include "matmeans/rng.hpp"
#include "matmeans/spd.hpp"

namespace matmeans {

enum class SampleStructure { Generic, Commuting, FurutaPremise, IllConditioned };

/// Deterministic sampling recipe: identical configs yield bit-identical
/// matrices.
struct SamplerConfig {
  int n = 2;
  double condition_target = 10.0;
  uint64_t seed = 0;
  SampleStructure structure = SampleStructure::Generic;
  double t = 0.5;  // only read for FurutaPremise

  void validate() const;
};

/// Haar-like random unitary: orthonormalized seeded complex Gaussian with the
/// first nonzero entry of each column made real positive.
Matrix random_unitary(int n, CounterRng& rng);

/// SPD with eigenvalues log-uniform on [1/sqrt(k), sqrt(k)], extreme
/// eigenvalues pinned to the interval endpoints so the achieved condition
/// number matches the target, conjugated by a random unitary.
SpdMatrix random_spd(const SamplerConfig& config);

/// (A, B) with B := (A^{t-2} - E)^{1/t} for a random PSD contraction E scaled
/// so that A^{t-2} - E stays well above zero; the pair certifiably satisfies
/// B^t <= A^{t-2}.
std::pair<SpdMatrix, SpdMatrix> random_furuta_pair(const SamplerConfig& config, double t);

/// Shared random eigenbasis, independent spectra.
std::pair<SpdMatrix, SpdMatrix> random_commuting_pair(const SamplerConfig& config);

}  // namespace matmeans
