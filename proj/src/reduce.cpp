#include "pcmrank/reduce.hpp"

#include <cmath>

namespace pcmrank {

TriadLocation max_inconsistent_triad(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  if (n < 3) {
    throw Error(ErrorCode::TooSmall,
                "worst-triad extraction requires n >= 3, got n = " + std::to_string(n));
  }
  TriadLocation best{0, 1, 2, triad_at(m, 0, 1, 2)};
  double best_score = triad_ratio_score(best.triad);
  // strict '>' keeps the lexicographically first location among ties
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (i == 0 && j == 1 && k == 2) continue;
        Triad t(m(i, j), m(i, k), m(j, k));
        const double s = triad_ratio_score(t);
        if (s > best_score) {
          best_score = s;
          best = {i, j, k, t};
        }
      }
    }
  }
  return best;
}

CanonicalTrace canonicalize(const Triad& t) {
  // closed forms of the scale / rebase / inversion steps
  const double prod = t.t1 * t.t3;
  Triad si(1.0, t.t2 / (t.t1 * t.t1), t.t3 / t.t1);
  Triad hte(1.0, t.t2 / prod, 1.0);
  const double x = triad_ratio_score(t);
  Triad iip(1.0, x, 1.0);
  return {std::nullopt, std::nullopt, si, hte, iip, x};
}

CanonicalTrace canonicalize(const PairwiseComparisonMatrix& m) {
  TriadLocation loc = max_inconsistent_triad(m);
  CanonicalTrace trace = canonicalize(loc.triad);
  trace.source = m;
  trace.step_red = std::move(loc);
  return trace;
}

Ordering compare_via_reduction(const PairwiseComparisonMatrix& a,
                               const PairwiseComparisonMatrix& b) {
  if (a.has_entry_beyond(kLogDomainThreshold) || b.has_entry_beyond(kLogDomainThreshold)) {
    return compare_scores_absolute(triad_log_ratio_score(max_inconsistent_triad(a).triad),
                                   triad_log_ratio_score(max_inconsistent_triad(b).triad));
  }
  return compare_scores_relative(canonicalize(a).canonical_value,
                                 canonicalize(b).canonical_value);
}

}  // namespace pcmrank
