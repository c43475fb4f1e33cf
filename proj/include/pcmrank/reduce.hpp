#pragma once

#include <optional>

#include "pcmrank/indices.hpp"
#include "pcmrank/rankings.hpp"

namespace pcmrank {

/// Step-by-step reduction of a matrix to its canonical triad (1, x, 1) with
/// x >= 1. Every step preserves the ratio score, and x equals the source
/// matrix's ratio score; two matrices compare under the worst-triad ranking
/// exactly as their canonical values do.
struct CanonicalTrace {
  std::optional<PairwiseComparisonMatrix> source;  // absent for triad-only traces
  std::optional<TriadLocation> step_red;           // chosen maximally inconsistent triad
  Triad step_si;                                   // (1, t2/t1^2, t3/t1)
  Triad step_hte;                                  // (1, t2/(t1*t3), 1)
  Triad step_iip;                                  // (1, x, 1), x >= 1
  double canonical_value;
};

/// The triad with maximal ratio score, lexicographically first among ties;
/// requires n >= 3.
TriadLocation max_inconsistent_triad(const PairwiseComparisonMatrix& m);

CanonicalTrace canonicalize(const Triad& t);
CanonicalTrace canonicalize(const PairwiseComparisonMatrix& m);

/// Compares canonical values of the two worst triads; agrees with
/// compare("koczkodaj", a, b) on every input.
Ordering compare_via_reduction(const PairwiseComparisonMatrix& a,
                               const PairwiseComparisonMatrix& b);

}  // namespace pcmrank
