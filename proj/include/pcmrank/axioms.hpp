#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcmrank/gen.hpp"
#include "pcmrank/rankings.hpp"

namespace pcmrank {

/// PR..RED are the six characterization axioms (the columns of the
/// independence table); OI applies to rankings as well; CT applies to index
/// functions only.
enum class AxiomId { PR, IIP, HTE, SI, MON, RED, OI, CT };

inline constexpr std::array<AxiomId, 6> kTableAxioms = {
    AxiomId::PR, AxiomId::IIP, AxiomId::HTE, AxiomId::SI, AxiomId::MON, AxiomId::RED};

std::string_view to_string(AxiomId a);
AxiomId axiom_from_string(std::string_view s);

/// Fuzzing parameters. Identical config (and seed) means identical verdicts,
/// including witnesses; each (ranking, axiom) cell derives its own child seed
/// so cells are independent of evaluation order.
struct SuiteConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials_per_cell = 10000;
  std::size_t max_n = 7;
  double entry_lo = 1.0 / 9.0;
  double entry_hi = 9.0;
  double scale_lo = 1.0 / 9.0;
  double scale_hi = 9.0;

  void check() const;  // throws BadSpec
};

/// Concrete instance demonstrating a violation. The matrices are everything
/// needed to replay the failure: the first one or two are the axiom's
/// operands (pair checks: lhs, rhs; MON: matrix, triad; RED: the matrix).
struct AxiomWitness {
  std::vector<PairwiseComparisonMatrix> matrices;
  std::vector<double> scores;
  std::string note;

  bool operator==(const AxiomWitness&) const = default;
};

struct AxiomVerdict {
  AxiomId axiom;
  std::string ranking;
  bool passed;
  /// Pass: trials completed with no violation found. Violation: 1-based index
  /// of the failing trial, or 0 when a pinned witness fired before fuzzing.
  std::uint64_t trials;
  std::optional<AxiomWitness> witness;

  bool operator==(const AxiomVerdict&) const = default;
};

/// Checks one axiom against one registered ranking: replays the pinned
/// witness for cells known to fail, then fuzzes. Pass verdicts are
/// statistical ("no violation found" over the trial budget); the MON and RED
/// scans are exhaustive per sampled matrix. CT requests throw CTOnRanking.
AxiomVerdict check_axiom(AxiomId axiom, std::string_view ranking_id, const SuiteConfig& config);

/// Consistency detection for an index function: samples exactly consistent
/// triads (t1, t1*t3, t3) and requires the index to vanish (<= 1e-12).
AxiomVerdict check_ct(const std::function<double(const PairwiseComparisonMatrix&)>& index,
                      const SuiteConfig& config);

/// Re-evaluates a Violation witness through compare/score with no fuzzing;
/// true when it still demonstrates the failure. (CT verdicts need the index
/// function and are replayed by the caller.)
bool replay_violation(const AxiomVerdict& verdict);

struct IndependenceTable {
  std::vector<std::string> rankings;              // row order
  std::vector<AxiomId> axioms;                    // column order
  std::vector<std::vector<AxiomVerdict>> cells;   // [row][col]

  /// The published expectation: koczkodaj passes every column, r_i fails
  /// exactly column i.
  static bool expected_pass(std::string_view ranking_id, AxiomId axiom);

  std::vector<std::pair<std::string, AxiomId>> mismatches() const;
  bool matches_expected() const { return mismatches().empty(); }
};

IndependenceTable independence_table(const SuiteConfig& config);

}  // namespace pcmrank
