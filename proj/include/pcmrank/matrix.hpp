#pragma once

#include <cstddef>
#include <vector>

#include "pcmrank/error.hpp"

namespace pcmrank {

/// Default relative tolerance for the reciprocity and unit-diagonal checks.
/// Constructor-built matrices (from_upper, generators) satisfy them exactly.
inline constexpr double kDefaultReciprocityTol = 1e-9;

class PairwiseComparisonMatrix;

/// Upper triangle of a 3x3 comparison matrix: t1 = a12, t2 = a13, t3 = a23.
/// Consistent exactly when t2 = t1*t3.
struct Triad {
  double t1;
  double t2;
  double t3;

  Triad(double v1, double v2, double v3);

  PairwiseComparisonMatrix to_matrix() const;
  static Triad from_matrix(const PairwiseComparisonMatrix& m);

  /// Upper triangle of the transposed matrix: all entries inverted.
  Triad transposed() const { return Triad(1.0 / t1, 1.0 / t2, 1.0 / t3); }

  bool operator==(const Triad&) const = default;
};

/// Positive square matrix of relative preference judgments with the
/// reciprocity invariant a_ji = 1/a_ij and unit diagonal. Immutable once
/// built; all operations on it are pure functions, safe to share across
/// threads.
class PairwiseComparisonMatrix {
 public:
  /// Checks a raw grid: squareness, positive finite entries, unit diagonal
  /// and reciprocity within `tolerance` (relative).
  static PairwiseComparisonMatrix validate(const std::vector<std::vector<double>>& raw,
                                           double tolerance = kDefaultReciprocityTol);

  /// Builds from the n(n-1)/2 upper-triangle values in row-major order;
  /// the lower triangle is filled with exact reciprocals, so the result
  /// passes validate at tolerance 0.
  static PairwiseComparisonMatrix from_upper(std::size_t n, const std::vector<double>& upper);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Upper-triangle values in row-major order (the from_upper encoding).
  std::vector<double> upper_values() const;

  /// True when some entry leaves [1/magnitude, magnitude]; used to switch
  /// ratio products to log-domain evaluation.
  bool has_entry_beyond(double magnitude) const;

  bool operator==(const PairwiseComparisonMatrix&) const = default;

 private:
  PairwiseComparisonMatrix(std::size_t n, std::vector<double> entries)
      : n_(n), a_(std::move(entries)) {}

  friend PairwiseComparisonMatrix transpose(const PairwiseComparisonMatrix& m);
  friend PairwiseComparisonMatrix permute(const PairwiseComparisonMatrix& m,
                                          const std::vector<std::size_t>& perm);
  friend PairwiseComparisonMatrix submatrix(const PairwiseComparisonMatrix& m,
                                            const std::vector<std::size_t>& indices);

  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// A triad's position inside a host matrix: 0-based indices i < j < k and the
/// extracted values (a_ij, a_ik, a_jk).
struct TriadLocation {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Triad triad;

  bool operator==(const TriadLocation&) const = default;
};

/// Extracts (a_ij, a_ik, a_jk); requires i < j < k < n.
Triad triad_at(const PairwiseComparisonMatrix& m, std::size_t i, std::size_t j, std::size_t k);

/// All C(n,3) triads in lexicographic (i,j,k) order; requires n >= 3.
std::vector<TriadLocation> triads(const PairwiseComparisonMatrix& m);

/// Principal submatrix at a strictly increasing index list; the definition
/// requires a proper subset, so 2 <= |indices| < n.
PairwiseComparisonMatrix submatrix(const PairwiseComparisonMatrix& m,
                                   const std::vector<std::size_t>& indices);

/// Multiplicative transitivity test: max over i<j<k of |a_ij*a_jk/a_ik - 1|
/// must not exceed `tolerance`. Matrices with n <= 2 have no triads and are
/// consistent by convention.
bool is_consistent(const PairwiseComparisonMatrix& m, double tolerance);

PairwiseComparisonMatrix transpose(const PairwiseComparisonMatrix& m);

/// Relabels entities: entry a_ij moves to position (perm[i], perm[j]).
PairwiseComparisonMatrix permute(const PairwiseComparisonMatrix& m,
                                 const std::vector<std::size_t>& perm);

/// (q . p)(i) = q[p[i]], so permute(permute(A, p), q) == permute(A, compose(q, p)).
std::vector<std::size_t> compose(const std::vector<std::size_t>& q,
                                 const std::vector<std::size_t>& p);

}  // namespace pcmrank
