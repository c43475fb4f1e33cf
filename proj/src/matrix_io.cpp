#include "pcmrank/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pcmrank {

namespace {

constexpr std::size_t kMaxSize = 10000;

// Token rows of the data lines: comments ('#' first non-space character) and
// blank lines skipped.
std::vector<std::vector<std::string>> data_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_value(const std::string& token) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + token + "'");
  }
  return v;
}

}  // namespace

PairwiseComparisonMatrix parse_matrix(std::istream& in, double tolerance) {
  const std::vector<std::vector<std::string>> rows = data_rows(in);
  if (rows.empty()) {
    throw Error(ErrorCode::ParseError, "empty matrix file: expected the size n first");
  }
  if (rows[0].size() != 1) {
    throw Error(ErrorCode::ParseError, "first data line must hold only the matrix size n");
  }
  const std::string& n_token = rows[0][0];
  char* end = nullptr;
  const unsigned long long n_raw = std::strtoull(n_token.c_str(), &end, 10);
  if (end != n_token.c_str() + n_token.size() || n_raw == 0) {
    throw Error(ErrorCode::ParseError,
                "first value must be the matrix size n, got '" + n_token + "'");
  }
  if (n_raw > kMaxSize) {
    throw Error(ErrorCode::ParseError, "matrix size " + n_token + " exceeds the limit of " +
                                           std::to_string(kMaxSize));
  }
  const std::size_t n = static_cast<std::size_t>(n_raw);
  const std::size_t data_lines = rows.size() - 1;

  // one data line (none for n = 1): upper form
  if (data_lines == (n == 1 ? 0u : 1u)) {
    const std::size_t expected = n * (n - 1) / 2;
    static const std::vector<std::string> kNoValues;
    const std::vector<std::string>& vals = n == 1 ? kNoValues : rows[1];
    if (vals.size() != expected) {
      throw Error(ErrorCode::ParseError,
                  "upper form for n = " + std::to_string(n) + " needs " +
                      std::to_string(expected) + " values, got " + std::to_string(vals.size()));
    }
    std::vector<double> upper(expected);
    for (std::size_t i = 0; i < expected; ++i) upper[i] = parse_value(vals[i]);
    return PairwiseComparisonMatrix::from_upper(n, upper);
  }

  // n data lines: full form (ragged rows surface as NotSquare from validate)
  if (data_lines == n) {
    std::vector<std::vector<double>> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
      grid[i].reserve(rows[i + 1].size());
      for (const std::string& tok : rows[i + 1]) grid[i].push_back(parse_value(tok));
    }
    return PairwiseComparisonMatrix::validate(grid, tolerance);
  }

  throw Error(ErrorCode::ParseError,
              "expected one upper-form line or " + std::to_string(n) +
                  " full-form rows after the size, got " + std::to_string(data_lines) +
                  " data lines");
}

PairwiseComparisonMatrix parse_matrix(const std::string& text, double tolerance) {
  std::istringstream in(text);
  return parse_matrix(in, tolerance);
}

PairwiseComparisonMatrix read_matrix_file(const std::string& path, double tolerance) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  return parse_matrix(in, tolerance);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_matrix(const PairwiseComparisonMatrix& m, bool upper_form) {
  std::ostringstream os;
  const std::size_t n = m.size();
  os << n << '\n';
  if (upper_form) {
    const std::vector<double> upper = m.upper_values();
    for (std::size_t i = 0; i < upper.size(); ++i) {
      os << (i ? " " : "") << format_double(upper[i]);
    }
    if (!upper.empty()) os << '\n';
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        os << (j ? " " : "") << format_double(m(i, j));
      }
      os << '\n';
    }
  }
  return os.str();
}

void write_matrix_file(const std::string& path, const PairwiseComparisonMatrix& m,
                       bool upper_form) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << format_matrix(m, upper_form);
  if (!out) {
    throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
  }
}

}  // namespace pcmrank
