#include "pcmrank/indices.hpp"

#include <algorithm>
#include <cmath>

namespace pcmrank {

namespace {

bool beyond(double v) { return v > kLogDomainThreshold || v < 1.0 / kLogDomainThreshold; }

bool needs_log_domain(const Triad& t) { return beyond(t.t1) || beyond(t.t2) || beyond(t.t3); }

}  // namespace

double triad_log_ratio_score(const Triad& t) {
  if (needs_log_domain(t)) {
    return std::abs(std::log(t.t2) - std::log(t.t1) - std::log(t.t3));
  }
  return std::abs(std::log(t.t2 / (t.t1 * t.t3)));
}

double triad_ratio_score(const Triad& t) {
  if (needs_log_domain(t)) {
    return std::exp(triad_log_ratio_score(t));
  }
  const double prod = t.t1 * t.t3;
  return std::max(t.t2 / prod, prod / t.t2);
}

double triad_kii(const Triad& t) {
  if (needs_log_domain(t)) {
    return -std::expm1(-triad_log_ratio_score(t));
  }
  const double prod = t.t1 * t.t3;
  return std::min(std::abs(1.0 - t.t2 / prod), std::abs(1.0 - prod / t.t2));
}

double kii_from_ratio(double s) {
  if (!(s >= 1.0)) {
    throw Error(ErrorCode::DomainError, "ratio score must be >= 1");
  }
  return 1.0 - 1.0 / s;
}

double ratio_from_kii(double v) {
  if (!(v >= 0.0) || v >= 1.0) {
    throw Error(ErrorCode::DomainError, "kii must lie in [0, 1)");
  }
  return 1.0 / (1.0 - v);
}

InconsistencyScore koczkodaj_index(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  double worst = 1.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        worst = std::max(worst, triad_ratio_score(Triad(m(i, j), m(i, k), m(j, k))));
      }
    }
  }
  return {kii_from_ratio(worst), worst};
}

double koczkodaj_kii_direct(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  double worst = 0.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        worst = std::max(worst, triad_kii(Triad(m(i, j), m(i, k), m(j, k))));
      }
    }
  }
  return worst;
}

double matrix_log_ratio_score(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  double worst = 0.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        worst = std::max(worst, triad_log_ratio_score(Triad(m(i, j), m(i, k), m(j, k))));
      }
    }
  }
  return worst;
}

std::vector<TriadDiagnostic> per_triad_report(const PairwiseComparisonMatrix& m) {
  std::vector<TriadDiagnostic> out;
  for (const TriadLocation& loc : triads(m)) {  // throws TooSmall when n < 3
    const double score = triad_ratio_score(loc.triad);
    out.push_back({loc, score, kii_from_ratio(score)});
  }
  return out;
}

}  // namespace pcmrank
