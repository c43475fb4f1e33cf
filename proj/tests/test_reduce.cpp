#include <cmath>

#include "doctest.h"
#include "pcmrank/gen.hpp"
#include "pcmrank/reduce.hpp"
#include "test_support.hpp"

using namespace pcmrank;
using pcmrank::test::error_of;

TEST_SUITE_BEGIN("reduce");

TEST_CASE("max_inconsistent_triad picks the lexicographically first maximum") {
  const auto single = Triad(1, 2, 1).to_matrix();
  const auto loc = max_inconsistent_triad(single);
  CHECK(loc.i == 0);
  CHECK(loc.j == 1);
  CHECK(loc.k == 2);

  const auto consistent = PairwiseComparisonMatrix::from_upper(4, {2, 4, 8, 2, 4, 2});
  const auto tie = max_inconsistent_triad(consistent);
  CHECK(tie.i == 0);
  CHECK(tie.j == 1);
  CHECK(tie.k == 2);
  CHECK(triad_ratio_score(tie.triad) == 1.0);

  // triads score 1, 2, 2, 1; both maxima carry the values (1,2,1) and the
  // lexicographic rule selects (1,2,4)
  const auto worked = PairwiseComparisonMatrix::from_upper(4, {1, 1, 2, 1, 1, 1});
  const auto best = max_inconsistent_triad(worked);
  CHECK(best.i == 0);
  CHECK(best.j == 1);
  CHECK(best.k == 3);
  CHECK(best.triad == Triad(1, 2, 1));
  CHECK(triad_ratio_score(best.triad) == 2.0);

  CHECK(error_of([] {
          return max_inconsistent_triad(PairwiseComparisonMatrix::from_upper(2, {2}));
        })->code() == ErrorCode::TooSmall);
}

TEST_CASE("canonicalize walks the documented closed forms") {
  // fixed point
  const auto fixed = canonicalize(Triad(1, 2, 1));
  CHECK(fixed.step_si == Triad(1, 2, 1));
  CHECK(fixed.step_hte == Triad(1, 2, 1));
  CHECK(fixed.step_iip == Triad(1, 2, 1));
  CHECK(fixed.canonical_value == 2.0);

  // consistent triad collapses to (1,1,1)
  const auto flat = canonicalize(Triad(3, 9, 3));
  CHECK(flat.step_si == Triad(1, 1, 1));
  CHECK(flat.step_hte == Triad(1, 1, 1));
  CHECK(flat.step_iip == Triad(1, 1, 1));
  CHECK(flat.canonical_value == 1.0);

  // (2,1,2): scale to (1, 1/4, 1), rebase keeps (1, 1/4, 1), inversion flips
  // the middle entry to 4
  const auto trace = canonicalize(Triad(2, 1, 2));
  CHECK(trace.step_si == Triad(1, 0.25, 1));
  CHECK(trace.step_hte == Triad(1, 0.25, 1));
  CHECK(trace.step_iip == Triad(1, 4, 1));
  CHECK(trace.canonical_value == 4.0);
  CHECK(trace.canonical_value == triad_ratio_score(Triad(2, 1, 2)));
  CHECK_FALSE(trace.source.has_value());
}

TEST_CASE("matrix canonicalization records the chosen triad") {
  const auto m = PairwiseComparisonMatrix::from_upper(4, {1, 1, 2, 1, 1, 1});
  const auto trace = canonicalize(m);
  REQUIRE(trace.source.has_value());
  REQUIRE(trace.step_red.has_value());
  CHECK(*trace.source == m);
  CHECK(trace.step_red->i == 0);
  CHECK(trace.step_red->j == 1);
  CHECK(trace.step_red->k == 3);
  CHECK(trace.step_iip == Triad(1, 2, 1));
  CHECK(trace.canonical_value == koczkodaj_index(m).ratio_score);
}

TEST_CASE("canonicalization is idempotent") {
  Rng rng(271828);
  for (int rep = 0; rep < 500; ++rep) {
    const Triad t = random_triad(rng, 1.0 / 9.0, 9.0);
    const auto once = canonicalize(t);
    const auto twice = canonicalize(once.step_iip);
    CHECK(twice.step_iip == once.step_iip);
    CHECK(twice.canonical_value == once.canonical_value);
  }
}

TEST_CASE("every step preserves the ratio score within 1e-12") {
  Rng rng(161803);
  for (int rep = 0; rep < 500; ++rep) {
    const Triad t = random_triad(rng, 1.0 / 9.0, 9.0);
    const auto trace = canonicalize(t);
    const double ref = triad_ratio_score(t);
    CHECK(triad_ratio_score(trace.step_si) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(triad_ratio_score(trace.step_hte) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(triad_ratio_score(trace.step_iip) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(trace.canonical_value == doctest::Approx(ref).epsilon(1e-12));
    CHECK(trace.canonical_value >= 1.0);
  }
}

TEST_CASE("canonical value matches the index through the bijection") {
  Rng rng(141421);
  for (int rep = 0; rep < 200; ++rep) {
    const auto m = random_pcm(3 + rng.uniform_index(5), rng, 1.0 / 9.0, 9.0);
    const auto trace = canonicalize(m);
    CHECK(trace.canonical_value ==
          doctest::Approx(ratio_from_kii(koczkodaj_index(m).kii)).epsilon(1e-12));
  }
}

TEST_CASE("compare_via_reduction mirrors the worst-triad ranking") {
  CHECK(compare_via_reduction(Triad(1, 2, 1).to_matrix(), Triad(1, 2, 1).to_matrix()) ==
        Ordering::Equivalent);
  CHECK(compare_via_reduction(Triad(1, 2, 1).to_matrix(), Triad(1, 3, 1).to_matrix()) ==
        Ordering::LessInconsistent);

  Rng rng(4321);
  for (int rep = 0; rep < 1000; ++rep) {
    const auto a = random_pcm(5, rng, 1.0 / 9.0, 9.0);
    const auto b = random_pcm(5, rng, 1.0 / 9.0, 9.0);
    CHECK(compare_via_reduction(a, b) == compare("koczkodaj", a, b));
  }

  CHECK(error_of([] {
          const auto small = PairwiseComparisonMatrix::from_upper(2, {2});
          return compare_via_reduction(small, small);
        })->code() == ErrorCode::TooSmall);
}

TEST_SUITE_END();
