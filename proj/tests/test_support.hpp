#pragma once

#include <optional>
#include <vector>

#include "pcmrank/error.hpp"
#include "pcmrank/matrix.hpp"

namespace pcmrank::test {

// Runs f and captures the library error it throws, if any.
template <typename F>
std::optional<Error> error_of(F&& f) {
  try {
    (void)f();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

inline std::vector<std::vector<double>> to_grid(const PairwiseComparisonMatrix& m) {
  std::vector<std::vector<double>> grid(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) grid[i][j] = m(i, j);
  }
  return grid;
}

}  // namespace pcmrank::test
