#include "pcmrank/rankings.hpp"

#include <cmath>
#include <limits>

#include "pcmrank/indices.hpp"

namespace pcmrank {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool beyond(double v) { return v > kLogDomainThreshold || v < 1.0 / kLogDomainThreshold; }

// Scans every (i,j,k) triple with i<j<k, folding term(a_ij, a_ik, a_jk).
template <typename Fold, typename Term>
double scan_triples(const PairwiseComparisonMatrix& m, double init, Fold fold, Term term) {
  const std::size_t n = m.size();
  double acc = init;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        acc = fold(acc, term(m(i, j), m(i, k), m(j, k)));
      }
    }
  }
  return acc;
}

double fold_max(double a, double b) { return a > b ? a : b; }
double fold_min(double a, double b) { return a < b ? a : b; }

double sym_ratio(double t1, double t2, double t3) { return triad_ratio_score(Triad(t1, t2, t3)); }

double sym_log_ratio(double t1, double t2, double t3) {
  return triad_log_ratio_score(Triad(t1, t2, t3));
}

double cyclic_log_ratio(double t1, double t2, double t3) {
  if (beyond(t1) || beyond(t2) || beyond(t3)) {
    return std::log(t1) + std::log(t3) - std::log(t2);
  }
  return std::log(t1 * t3 / t2);
}

// a_ij * a_jk / a_ik, no symmetrization; can fall below 1.
double cyclic_ratio(double t1, double t2, double t3) {
  if (beyond(t1) || beyond(t2) || beyond(t3)) {
    return std::exp(cyclic_log_ratio(t1, t2, t3));
  }
  return t1 * t3 / t2;
}

double last_sq_log_ratio(double, double t2, double t3) {
  if (beyond(t2) || beyond(t3)) {
    return std::abs(2.0 * std::log(t3) - std::log(t2));
  }
  return std::abs(std::log(t3 * t3 / t2));
}

// max{a_jk^2/a_ik, a_ik/a_jk^2}
double last_sq_ratio(double t1, double t2, double t3) {
  if (beyond(t2) || beyond(t3)) {
    return std::exp(last_sq_log_ratio(t1, t2, t3));
  }
  const double sq = t3 * t3;
  return std::max(sq / t2, t2 / sq);
}

double last_log_ratio(double, double t2, double t3) {
  if (beyond(t2) || beyond(t3)) {
    return std::abs(std::log(t3) - std::log(t2));
  }
  return std::abs(std::log(t3 / t2));
}

// max{a_jk/a_ik, a_ik/a_jk}
double last_ratio(double t1, double t2, double t3) {
  if (beyond(t2) || beyond(t3)) {
    return std::exp(last_log_ratio(t1, t2, t3));
  }
  return std::max(t3 / t2, t2 / t3);
}

std::vector<RankingComparator> build_registry() {
  using M = PairwiseComparisonMatrix;
  std::vector<RankingComparator> v;
  v.push_back({"koczkodaj", "worst symmetrized triad ratio (max)",
               [](const M& m) { return koczkodaj_index(m).ratio_score; },
               [](const M& m) { return matrix_log_ratio_score(m); },
               false, false});
  v.push_back({"r1", "best symmetrized triad ratio (min), order reversed",
               [](const M& m) { return scan_triples(m, kInf, fold_min, sym_ratio); },
               [](const M& m) { return scan_triples(m, kInf, fold_min, sym_log_ratio); },
               true, false});
  v.push_back({"r2", "worst cyclic ratio a_ij*a_jk/a_ik, no symmetrization (max)",
               [](const M& m) { return scan_triples(m, -kInf, fold_max, cyclic_ratio); },
               [](const M& m) { return scan_triples(m, -kInf, fold_max, cyclic_log_ratio); },
               false, false});
  v.push_back({"r3", "worst of max{a_jk^2/a_ik, a_ik/a_jk^2} (max)",
               [](const M& m) { return scan_triples(m, -kInf, fold_max, last_sq_ratio); },
               [](const M& m) { return scan_triples(m, 0.0, fold_max, last_sq_log_ratio); },
               false, false});
  v.push_back({"r4", "worst of max{a_jk/a_ik, a_ik/a_jk} (max)",
               [](const M& m) { return scan_triples(m, -kInf, fold_max, last_ratio); },
               [](const M& m) { return scan_triples(m, 0.0, fold_max, last_log_ratio); },
               false, false});
  v.push_back({"r5", "best symmetrized triad ratio (min)",
               [](const M& m) { return scan_triples(m, kInf, fold_min, sym_ratio); },
               [](const M& m) { return scan_triples(m, kInf, fold_min, sym_log_ratio); },
               false, false});
  v.push_back({"r6", "size-weighted: n * ln(worst symmetrized ratio), additive",
               [](const M& m) { return double(m.size()) * matrix_log_ratio_score(m); },
               [](const M& m) { return double(m.size()) * matrix_log_ratio_score(m); },
               false, true});
  return v;
}

const std::vector<RankingComparator>& registry() {
  static const std::vector<RankingComparator> regs = build_registry();
  return regs;
}

void require_size(const RankingComparator& r, const PairwiseComparisonMatrix& m) {
  // The counterexample rankings quantify over triads; only the worst-triad
  // ranking extends below n = 3 (with score 1).
  if (m.size() < 3 && r.id != "koczkodaj") {
    throw Error(ErrorCode::TooSmall,
                "ranking '" + r.id + "' requires n >= 3, got n = " + std::to_string(m.size()));
  }
}

}  // namespace

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::LessInconsistent: return "less_inconsistent";
    case Ordering::Equivalent: return "equivalent";
    case Ordering::MoreInconsistent: return "more_inconsistent";
  }
  return "unknown";
}

Ordering opposite(Ordering o) {
  switch (o) {
    case Ordering::LessInconsistent: return Ordering::MoreInconsistent;
    case Ordering::MoreInconsistent: return Ordering::LessInconsistent;
    case Ordering::Equivalent: return Ordering::Equivalent;
  }
  return o;
}

const std::vector<std::string>& ranking_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& r : registry()) out.push_back(r.id);
    return out;
  }();
  return ids;
}

bool is_known_ranking(std::string_view id) {
  for (const auto& r : registry()) {
    if (r.id == id) return true;
  }
  return false;
}

const RankingComparator& ranking(std::string_view id) {
  for (const auto& r : registry()) {
    if (r.id == id) return r;
  }
  throw Error(ErrorCode::UnknownRanking, "unknown ranking '" + std::string(id) + "'");
}

double score(std::string_view id, const PairwiseComparisonMatrix& m) {
  const RankingComparator& r = ranking(id);
  require_size(r, m);
  return r.score(m);
}

Ordering compare_scores_relative(double a, double b, double rel_tol) {
  if (a == b) return Ordering::Equivalent;
  if (std::isinf(a) || std::isinf(b)) {
    return a < b ? Ordering::LessInconsistent : Ordering::MoreInconsistent;
  }
  if (std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b))) {
    return Ordering::Equivalent;
  }
  return a < b ? Ordering::LessInconsistent : Ordering::MoreInconsistent;
}

Ordering compare_scores_absolute(double a, double b, double abs_tol) {
  if (a == b) return Ordering::Equivalent;
  if (std::isinf(a) || std::isinf(b)) {
    return a < b ? Ordering::LessInconsistent : Ordering::MoreInconsistent;
  }
  if (std::abs(a - b) <= abs_tol) return Ordering::Equivalent;
  return a < b ? Ordering::LessInconsistent : Ordering::MoreInconsistent;
}

CachedComparison::CachedComparison(const RankingComparator& r,
                                   const PairwiseComparisonMatrix& left)
    : r_(r),
      left_extreme_(left.has_entry_beyond(kLogDomainThreshold)),
      left_score_(r.score(left)),
      left_log_(r.log_comparand(left)) {}

Ordering CachedComparison::versus(const PairwiseComparisonMatrix& right) const {
  Ordering base;
  if (r_.additive || left_extreme_ || right.has_entry_beyond(kLogDomainThreshold)) {
    base = compare_scores_absolute(left_log_, r_.log_comparand(right));
  } else {
    base = compare_scores_relative(left_score_, r_.score(right));
  }
  return r_.higher_score_is_less_inconsistent ? opposite(base) : base;
}

Ordering compare(std::string_view id, const PairwiseComparisonMatrix& a,
                 const PairwiseComparisonMatrix& b) {
  const RankingComparator& r = ranking(id);
  require_size(r, a);
  require_size(r, b);
  return CachedComparison(r, a).versus(b);
}

}  // namespace pcmrank
