#pragma once

#include <vector>

#include "pcmrank/matrix.hpp"

namespace pcmrank {

/// Entries beyond this magnitude (or below its reciprocal) switch ratio
/// products to log-domain evaluation so scores stay comparable without
/// overflow; entries up to 1e+-150 are supported.
inline constexpr double kLogDomainThreshold = 1e12;

/// kii values at or below this count as consistent.
inline constexpr double kConsistencyKiiTol = 1e-12;

/// The two equivalent renderings of the worst-triad inconsistency level:
/// kii in [0,1) and the ratio score in [1,inf), tied by kii = 1 - 1/ratio.
struct InconsistencyScore {
  double kii;
  double ratio_score;
};

struct TriadDiagnostic {
  TriadLocation location;
  double ratio_score;
  double kii_contribution;

  bool operator==(const TriadDiagnostic&) const = default;
};

/// max{t2/(t1*t3), (t1*t3)/t2}; equals 1 exactly at consistency.
double triad_ratio_score(const Triad& t);

/// ln of triad_ratio_score, evaluated without forming the ratio when entries
/// are extreme.
double triad_log_ratio_score(const Triad& t);

/// Deviation form: min{|1 - t2/(t1*t3)|, |1 - (t1*t3)/t2|}. Kept as an
/// independent evaluation route; equals 1 - 1/triad_ratio_score analytically.
double triad_kii(const Triad& t);

double kii_from_ratio(double s);  // 1 - 1/s, s >= 1
double ratio_from_kii(double v);  // 1/(1 - v), v in [0, 1)

/// Worst-triad score of the whole matrix. The ratio scan is primary and kii
/// is derived through the bijection; n <= 2 yields {0, 1}.
InconsistencyScore koczkodaj_index(const PairwiseComparisonMatrix& m);

/// Deviation-form route: max over triads of triad_kii. Independent of the
/// ratio scan; used to cross-check the bijection.
double koczkodaj_kii_direct(const PairwiseComparisonMatrix& m);

/// max over triads of triad_log_ratio_score; 0 for n <= 2. Overflow-safe
/// comparand for rankings.
double matrix_log_ratio_score(const PairwiseComparisonMatrix& m);

/// One diagnostic per triad in lexicographic order; requires n >= 3.
std::vector<TriadDiagnostic> per_triad_report(const PairwiseComparisonMatrix& m);

}  // namespace pcmrank
