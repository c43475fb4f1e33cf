#include "pcmrank/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pcmrank {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

std::string at(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "a[" << i + 1 << "][" << j + 1 << "]";
  return os.str();
}

void check_tolerance(double tolerance) {
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::DomainError, "tolerance must be a finite non-negative real");
  }
}

}  // namespace

Triad::Triad(double v1, double v2, double v3) : t1(v1), t2(v2), t3(v3) {
  const double vals[3] = {v1, v2, v3};
  const std::size_t pos[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int idx = 0; idx < 3; ++idx) {
    if (!positive_finite(vals[idx])) {
      throw Error(ErrorCode::NonPositiveEntry,
                  "triad value t" + std::to_string(idx + 1) + " must be a positive finite real",
                  pos[idx][0], pos[idx][1], vals[idx]);
    }
  }
}

PairwiseComparisonMatrix Triad::to_matrix() const {
  return PairwiseComparisonMatrix::from_upper(3, {t1, t2, t3});
}

Triad Triad::from_matrix(const PairwiseComparisonMatrix& m) {
  if (m.size() != 3) {
    throw Error(ErrorCode::DomainError,
                "triad conversion requires a 3x3 matrix, got " + std::to_string(m.size()));
  }
  return Triad(m(0, 1), m(0, 2), m(1, 2));
}

PairwiseComparisonMatrix PairwiseComparisonMatrix::validate(
    const std::vector<std::vector<double>>& raw, double tolerance) {
  check_tolerance(tolerance);
  const std::size_t n = raw.size();
  if (n == 0) {
    throw Error(ErrorCode::NotSquare, "matrix has no rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::NotSquare,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
  }
  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = raw[i][j];
      if (!positive_finite(v)) {
        throw Error(ErrorCode::NonPositiveEntry,
                    at(i, j) + " must be a positive finite real", i, j, v);
      }
      flat[i * n + j] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double d = flat[i * n + i];
    if (std::abs(d - 1.0) > tolerance) {
      throw Error(ErrorCode::DiagonalViolation, at(i, i) + " must equal 1", i, i, d);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = flat[i * n + j] * flat[j * n + i];
      if (std::abs(p - 1.0) > tolerance) {
        throw Error(ErrorCode::ReciprocityViolation,
                    at(i, j) + " * " + at(j, i) + " = " + std::to_string(p) +
                        ", expected 1",
                    i, j, p);
      }
    }
  }
  return PairwiseComparisonMatrix(n, std::move(flat));
}

PairwiseComparisonMatrix PairwiseComparisonMatrix::from_upper(std::size_t n,
                                                              const std::vector<double>& upper) {
  if (n == 0) {
    throw Error(ErrorCode::DomainError, "matrix size must be at least 1");
  }
  const std::size_t expected = n * (n - 1) / 2;
  if (upper.size() != expected) {
    throw Error(ErrorCode::WrongLength,
                "expected " + std::to_string(expected) + " upper-triangle values for n = " +
                    std::to_string(n) + ", got " + std::to_string(upper.size()));
  }
  std::vector<double> flat(n * n, 1.0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++pos) {
      const double v = upper[pos];
      if (!positive_finite(v)) {
        throw Error(ErrorCode::NonPositiveEntry,
                    at(i, j) + " must be a positive finite real", i, j, v);
      }
      flat[i * n + j] = v;
      flat[j * n + i] = 1.0 / v;
    }
  }
  return PairwiseComparisonMatrix(n, std::move(flat));
}

std::vector<double> PairwiseComparisonMatrix::upper_values() const {
  std::vector<double> out;
  out.reserve(n_ * (n_ - 1) / 2);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      out.push_back(a_[i * n_ + j]);
    }
  }
  return out;
}

bool PairwiseComparisonMatrix::has_entry_beyond(double magnitude) const {
  const double lo = 1.0 / magnitude;
  return std::any_of(a_.begin(), a_.end(),
                     [&](double v) { return v > magnitude || v < lo; });
}

Triad triad_at(const PairwiseComparisonMatrix& m, std::size_t i, std::size_t j, std::size_t k) {
  if (!(i < j && j < k && k < m.size())) {
    throw Error(ErrorCode::BadIndices, "triad indices must satisfy i < j < k < n");
  }
  return Triad(m(i, j), m(i, k), m(j, k));
}

std::vector<TriadLocation> triads(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  if (n < 3) {
    throw Error(ErrorCode::TooSmall,
                "triad enumeration requires n >= 3, got n = " + std::to_string(n));
  }
  std::vector<TriadLocation> out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        out.push_back({i, j, k, Triad(m(i, j), m(i, k), m(j, k))});
      }
    }
  }
  return out;
}

PairwiseComparisonMatrix submatrix(const PairwiseComparisonMatrix& m,
                                   const std::vector<std::size_t>& indices) {
  const std::size_t n = m.size();
  const std::size_t k = indices.size();
  if (k < 2 || k >= n) {
    throw Error(ErrorCode::BadIndices,
                "submatrix needs 2 <= m < n indices (proper subset), got " + std::to_string(k) +
                    " of n = " + std::to_string(n));
  }
  for (std::size_t p = 0; p < k; ++p) {
    if (indices[p] >= n || (p > 0 && indices[p] <= indices[p - 1])) {
      throw Error(ErrorCode::BadIndices, "indices must be strictly increasing and within range");
    }
  }
  std::vector<double> flat(k * k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      flat[p * k + q] = m(indices[p], indices[q]);
    }
  }
  return PairwiseComparisonMatrix(k, std::move(flat));
}

bool is_consistent(const PairwiseComparisonMatrix& m, double tolerance) {
  check_tolerance(tolerance);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (std::abs(m(i, j) * m(j, k) / m(i, k) - 1.0) > tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

PairwiseComparisonMatrix transpose(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      flat[i * n + j] = m(j, i);
    }
  }
  return PairwiseComparisonMatrix(n, std::move(flat));
}

PairwiseComparisonMatrix permute(const PairwiseComparisonMatrix& m,
                                 const std::vector<std::size_t>& perm) {
  const std::size_t n = m.size();
  if (perm.size() != n) {
    throw Error(ErrorCode::BadPermutation, "permutation length must equal matrix size");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) {
      throw Error(ErrorCode::BadPermutation, "not a permutation of 0..n-1");
    }
    seen[v] = true;
  }
  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      flat[perm[i] * n + perm[j]] = m(i, j);
    }
  }
  return PairwiseComparisonMatrix(n, std::move(flat));
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& q,
                                 const std::vector<std::size_t>& p) {
  if (q.size() != p.size()) {
    throw Error(ErrorCode::BadPermutation, "cannot compose permutations of different sizes");
  }
  std::vector<std::size_t> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= q.size()) {
      throw Error(ErrorCode::BadPermutation, "not a permutation of 0..n-1");
    }
    r[i] = q[p[i]];
  }
  return r;
}

}  // namespace pcmrank
