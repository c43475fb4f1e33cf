#include "pcmrank/gen.hpp"

#include <algorithm>
#include <cmath>

namespace pcmrank {

double Rng::uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

double Rng::log_uniform(double lo, double hi) {
  if (lo == hi) return lo;
  const double v = std::exp(std::log(lo) + uniform01() * (std::log(hi) - std::log(lo)));
  return std::clamp(v, lo, hi);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t u = next_u64();
    if (u < limit) return u % n;
  }
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[uniform_index(i)]);
  }
  return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = base ^ h;  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void GenSpec::check() const {
  if (n == 0) {
    throw Error(ErrorCode::BadSpec, "matrix size must be at least 1");
  }
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::BadSpec, "entry bounds must satisfy 0 < lo <= hi");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::BadSpec, "perturbation delta must be a finite non-negative real");
  }
}

PairwiseComparisonMatrix random_pcm(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> upper(n * (n - 1) / 2);
  for (double& v : upper) v = rng.log_uniform(lo, hi);
  return PairwiseComparisonMatrix::from_upper(n, upper);
}

PairwiseComparisonMatrix random_consistent(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> w(n);
  for (double& v : w) v = rng.log_uniform(lo, hi);
  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      upper.push_back(w[i] / w[j]);
    }
  }
  return PairwiseComparisonMatrix::from_upper(n, upper);
}

PairwiseComparisonMatrix perturb(const PairwiseComparisonMatrix& base, double delta, Rng& rng) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::BadSpec, "perturbation delta must be a finite non-negative real");
  }
  std::vector<double> upper = base.upper_values();
  for (double& v : upper) v *= std::exp(rng.uniform(-delta, delta));
  return PairwiseComparisonMatrix::from_upper(base.size(), upper);
}

Triad random_triad(Rng& rng, double lo, double hi) {
  const double t1 = rng.log_uniform(lo, hi);
  const double t2 = rng.log_uniform(lo, hi);
  const double t3 = rng.log_uniform(lo, hi);
  return Triad(t1, t2, t3);
}

PairwiseComparisonMatrix generate(const GenSpec& spec) {
  spec.check();
  Rng rng(spec.seed);
  switch (spec.mode) {
    case GenMode::Random:
      return random_pcm(spec.n, rng, spec.lo, spec.hi);
    case GenMode::Consistent:
      return random_consistent(spec.n, rng, spec.lo, spec.hi);
    case GenMode::Perturbed: {
      PairwiseComparisonMatrix base =
          spec.base ? *spec.base : random_consistent(spec.n, rng, spec.lo, spec.hi);
      return perturb(base, spec.delta, rng);
    }
  }
  throw Error(ErrorCode::BadSpec, "unknown generation mode");
}

}  // namespace pcmrank
