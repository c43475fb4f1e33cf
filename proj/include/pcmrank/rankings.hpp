#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pcmrank/matrix.hpp"

namespace pcmrank {

/// Comparator equivalence tolerance: relative on ratio-space scores, absolute
/// on log-space comparands (the two coincide to first order).
inline constexpr double kComparatorRelTol = 1e-9;

/// Outcome of comparing matrix A against matrix B under a ranking.
enum class Ordering {
  LessInconsistent,  // A strictly less inconsistent than B
  Equivalent,
  MoreInconsistent,
};

std::string_view to_string(Ordering o);
Ordering opposite(Ordering o);

/// A named total preorder over comparison matrices, induced by a scalar
/// comparand. `score` is the public ratio-space scalar; `log_comparand` is
/// the overflow-safe equivalent used when entries are extreme (and always
/// for additive rankings, whose score already lives in log space).
struct RankingComparator {
  std::string id;
  std::string description;
  std::function<double(const PairwiseComparisonMatrix&)> score;
  std::function<double(const PairwiseComparisonMatrix&)> log_comparand;
  bool higher_score_is_less_inconsistent = false;
  bool additive = false;  // compare log_comparand with absolute tolerance
};

/// Registry order: koczkodaj, r1..r6. Immutable after construction.
const std::vector<std::string>& ranking_ids();
bool is_known_ranking(std::string_view id);
const RankingComparator& ranking(std::string_view id);

/// The ranking's scalar comparand. All rankings require n >= 3 except
/// koczkodaj, which extends to smaller matrices with score 1.
double score(std::string_view id, const PairwiseComparisonMatrix& m);

Ordering compare(std::string_view id, const PairwiseComparisonMatrix& a,
                 const PairwiseComparisonMatrix& b);

Ordering compare_scores_relative(double a, double b, double rel_tol = kComparatorRelTol);
Ordering compare_scores_absolute(double a, double b, double abs_tol = kComparatorRelTol);

/// Precomputes one side of a comparison so a matrix can be ranked against
/// many others without rescoring it. versus(b) == compare(id, left, b).
class CachedComparison {
 public:
  CachedComparison(const RankingComparator& r, const PairwiseComparisonMatrix& left);
  Ordering versus(const PairwiseComparisonMatrix& right) const;

 private:
  const RankingComparator& r_;
  bool left_extreme_;
  double left_score_;
  double left_log_;
};

}  // namespace pcmrank
