#pragma once

#include <iosfwd>
#include <string>

#include "pcmrank/matrix.hpp"

namespace pcmrank {

/// Plain-text matrix file. Lines starting with '#' are comments. The first
/// data line holds n; the remaining values are either the full n x n grid
/// (validated at `tolerance`) or the n(n-1)/2 upper-triangle values in
/// row-major order (completed with exact reciprocals).
PairwiseComparisonMatrix parse_matrix(std::istream& in,
                                      double tolerance = kDefaultReciprocityTol);
PairwiseComparisonMatrix parse_matrix(const std::string& text,
                                      double tolerance = kDefaultReciprocityTol);
PairwiseComparisonMatrix read_matrix_file(const std::string& path,
                                          double tolerance = kDefaultReciprocityTol);

/// 17 significant digits: doubles survive the text round trip bit-exactly.
std::string format_double(double v);

/// Upper form writes one line of upper-triangle values (reciprocity is
/// unrepresentable as an error there); full form writes the n x n grid.
std::string format_matrix(const PairwiseComparisonMatrix& m, bool upper_form = true);

void write_matrix_file(const std::string& path, const PairwiseComparisonMatrix& m,
                       bool upper_form = true);

}  // namespace pcmrank
