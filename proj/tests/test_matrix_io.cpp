#include <cstdio>
#include <string>

#include "doctest.h"
#include "pcmrank/gen.hpp"
#include "pcmrank/matrix_io.hpp"
#include "test_support.hpp"

using namespace pcmrank;
using pcmrank::test::error_of;

TEST_SUITE_BEGIN("matrix_io");

TEST_CASE("parses full form with comments") {
  const auto m = parse_matrix(
      "# ratio judgments\n"
      "3\n"
      "1 2 4\n"
      "0.5 1 2\n"
      "  # inline comment line\n"
      "0.25 0.5 1\n");
  CHECK(m == PairwiseComparisonMatrix::from_upper(3, {2, 4, 2}));
}

TEST_CASE("parses upper form") {
  CHECK(parse_matrix("3\n1 2 1\n") == PairwiseComparisonMatrix::from_upper(3, {1, 2, 1}));
  CHECK(parse_matrix("2\n4\n") == PairwiseComparisonMatrix::from_upper(2, {4}));
  CHECK(parse_matrix("1\n") == PairwiseComparisonMatrix::from_upper(1, {}));
  CHECK(parse_matrix("1\n1\n").size() == 1);  // 1x1 full form
}

TEST_CASE("parse error paths") {
  CHECK(error_of([] { return parse_matrix(""); })->code() == ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("# only comments\n"); })->code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("0\n"); })->code() == ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("x\n1\n"); })->code() == ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("3 1\n2 1\n"); })->code() == ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("3\n1 2\n"); })->code() == ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("3\n1 2 banana\n"); })->code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("2\n1 2\n0.5 1\n1 1\n"); })->code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { return parse_matrix("20000\n"); })->code() == ErrorCode::ParseError);
}

TEST_CASE("validation failures carry their own codes") {
  // ragged full form
  CHECK(error_of([] { return parse_matrix("2\n1 2\n0.5\n"); })->code() ==
        ErrorCode::NotSquare);
  CHECK(error_of([] { return parse_matrix("2\n1 2\n0.4 1\n"); })->code() ==
        ErrorCode::ReciprocityViolation);
  CHECK(error_of([] { return parse_matrix("3\n1 0 1\n"); })->code() ==
        ErrorCode::NonPositiveEntry);
  // loose file accepted under a wider tolerance
  CHECK(parse_matrix("2\n1 0.333\n3 1\n", 1e-2).size() == 2);
}

TEST_CASE("format_double survives the round trip") {
  for (const double v : {1.0 / 3.0, 2.0, 1e-7, 9.000000001, 1.0 / 9.0, 123456.789012345}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("matrix files round-trip bit-exactly in both forms") {
  Rng rng(77);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + rng.uniform_index(6);
    const auto m = n == 1 ? PairwiseComparisonMatrix::from_upper(1, {})
                          : random_pcm(n, rng, 1.0 / 9.0, 9.0);
    CHECK(parse_matrix(format_matrix(m, true)) == m);
    CHECK(parse_matrix(format_matrix(m, false)) == m);
  }
}

TEST_CASE("file round trip on disk") {
  Rng rng(78);
  const auto m = random_pcm(4, rng, 1.0 / 9.0, 9.0);
  const std::string path = "pcmrank_io_test.tmp";
  write_matrix_file(path, m);
  CHECK(read_matrix_file(path) == m);
  std::remove(path.c_str());
  CHECK(error_of([] { return read_matrix_file("definitely_missing_file.txt"); })->code() ==
        ErrorCode::IoError);
}

TEST_SUITE_END();
