#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "pcmrank/matrix.hpp"

namespace pcmrank {

/// Deterministic, platform-independent random source. The engine is
/// std::mt19937_64, whose output sequence is fixed by the C++ standard; the
/// value mappings are spelled out here (uniform doubles take the top 53 bits,
/// bounded integers use rejection sampling, shuffles are Fisher-Yates), so a
/// seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// [0, 1) with 53-bit resolution: (next_u64() >> 11) * 2^-53.
  double uniform01();

  double uniform(double lo, double hi);

  /// exp of a uniform draw on [ln lo, ln hi], clamped into [lo, hi]; makes x
  /// and 1/x equiprobable over reciprocal-symmetric bounds. lo == hi returns
  /// lo exactly.
  double log_uniform(double lo, double hi);

  /// Unbiased draw from [0, n) by rejection.
  std::uint64_t uniform_index(std::uint64_t n);

  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a textual tag (FNV-1a over the tag, splitmix64
/// finalizer) so independent sub-streams get decorrelated child seeds.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

enum class GenMode { Random, Consistent, Perturbed };

struct GenSpec {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  double lo = 1.0 / 9.0;
  double hi = 9.0;
  GenMode mode = GenMode::Random;
  double delta = 0.0;                                // Perturbed only
  std::optional<PairwiseComparisonMatrix> base;      // Perturbed; fresh consistent base if absent

  void check() const;  // throws BadSpec
};

/// Upper-triangle entries drawn log-uniform on [lo, hi], reciprocals exact.
PairwiseComparisonMatrix random_pcm(std::size_t n, Rng& rng, double lo, double hi);

/// a_ij = w_i/w_j for log-uniform weights w; consistent up to rounding.
PairwiseComparisonMatrix random_consistent(std::size_t n, Rng& rng, double lo, double hi);

/// Multiplies each upper-triangle entry by exp(u), u uniform on [-delta, delta],
/// then recompletes reciprocals. delta = 0 leaves the upper triangle untouched.
PairwiseComparisonMatrix perturb(const PairwiseComparisonMatrix& base, double delta, Rng& rng);

Triad random_triad(Rng& rng, double lo, double hi);

PairwiseComparisonMatrix generate(const GenSpec& spec);

}  // namespace pcmrank
