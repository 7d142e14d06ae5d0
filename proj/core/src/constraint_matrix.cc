// Copyright 2026 The Sidelink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sidelink/constraint_matrix.h"

#include <algorithm>
#include <string>
#include <utility>

#include "sidelink/errors.h"

namespace sidelink {
namespace {

constexpr double kMaxSubmatrixCount = 5e7;

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool NextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

double Binomial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / i;
  return out;
}

std::string UsedTimes(const std::string& what, std::size_t index, int count) {
  std::string head = what + " " + std::to_string(index);
  if (count == 0) return head + " unused";
  if (count == 2) return head + " used twice";
  return head + " used " + std::to_string(count) + " times";
}

void AddCountViolations(FeasibilityReport& report, const std::vector<int>& counts,
                        std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    if (counts[r] != 1) {
      const int c = counts[r];
      report.violations.push_back(
          c == 0 ? "vehicle " + std::to_string(r) + " has no resource"
                 : "vehicle " + std::to_string(r) + " has " + std::to_string(c) +
                       " resources");
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (counts[n + s] != 1) {
      report.violations.push_back(UsedTimes("subframe", s, counts[n + s]));
    }
  }
}

// Vehicle count and resource range are prerequisites for encoding x.
bool CheckShape(FeasibilityReport& report, const ResourceAssignment& assignment,
                std::size_t n, std::size_t k) {
  if (assignment.size() != n) {
    report.violations.push_back("assignment covers " +
                                std::to_string(assignment.size()) +
                                " vehicles, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment.vehicle_to_resource[i] >= k * n) {
      report.violations.push_back(
          "vehicle " + std::to_string(i) + " assigned resource " +
          std::to_string(assignment.vehicle_to_resource[i]) + " outside [0, " +
          std::to_string(k * n) + ")");
    }
  }
  report.feasible = report.violations.empty();
  return report.feasible;
}

}  // namespace

BinaryConstraintMatrix::BinaryConstraintMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

BinaryConstraintMatrix BinaryConstraintMatrix::Identity(std::size_t n) {
  BinaryConstraintMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryConstraintMatrix BinaryConstraintMatrix::Ones(std::size_t rows,
                                                    std::size_t cols) {
  BinaryConstraintMatrix m(rows, cols);
  std::fill(m.data_.begin(), m.data_.end(), 1);
  return m;
}

BinaryConstraintMatrix BinaryConstraintMatrix::FromRows(
    const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinaryConstraintMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged binary matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) {
        throw InvalidParameterError("binary matrix entries must be 0 or 1");
      }
      m.set(r, c, rows[r][c] == 1);
    }
  }
  return m;
}

std::vector<int> BinaryConstraintMatrix::column_sums() const {
  std::vector<int> sums(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

std::vector<int> BinaryConstraintMatrix::row_sums() const {
  std::vector<int> sums(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[r] += (*this)(r, c);
  return sums;
}

std::vector<int> BinaryConstraintMatrix::multiply(
    const std::vector<std::uint8_t>& x) const {
  if (x.size() != cols_) {
    throw DimensionError("vector of length " + std::to_string(x.size()) +
                         " against " + std::to_string(cols_) + " columns");
  }
  std::vector<int> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return out;
}

BinaryConstraintMatrix Kronecker(const BinaryConstraintMatrix& a,
                                 const BinaryConstraintMatrix& b) {
  BinaryConstraintMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (!a(ar, ac)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out.set(ar * b.rows() + br, ac * b.cols() + bc, b(br, bc) != 0);
    }
  return out;
}

BinaryConstraintMatrix StackRows(const BinaryConstraintMatrix& top,
                                 const BinaryConstraintMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionError("cannot stack matrices with different column counts");
  }
  BinaryConstraintMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top(r, c) != 0);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c)
      out.set(top.rows() + r, c, bottom(r, c) != 0);
  return out;
}

BinaryConstraintMatrix BuildUnconstrainedConstraintMatrix(std::size_t n) {
  if (n == 0) throw InvalidParameterError("constraint matrix needs n >= 1");
  const auto identity = BinaryConstraintMatrix::Identity(n);
  const auto ones_row = BinaryConstraintMatrix::Ones(1, n);
  return StackRows(Kronecker(identity, ones_row), Kronecker(ones_row, identity));
}

BinaryConstraintMatrix BuildConstrainedConstraintMatrix(std::size_t n,
                                                        std::size_t k) {
  if (k == 0) throw InvalidParameterError("constraint matrix needs k >= 1");
  return Kronecker(BuildUnconstrainedConstraintMatrix(n),
                   BinaryConstraintMatrix::Ones(1, k));
}

FeasibilityReport CheckFeasibilityByMatrix(const ResourceAssignment& assignment,
                                           std::size_t n, std::size_t k) {
  FeasibilityReport report;
  if (n == 0) {
    if (!assignment.vehicle_to_resource.empty()) {
      report.feasible = false;
      report.violations.push_back("assignment is not empty for n = 0");
    }
    return report;
  }
  if (!CheckShape(report, assignment, n, k)) return report;
  const BinaryConstraintMatrix a = BuildConstrainedConstraintMatrix(n, k);
  std::vector<std::uint8_t> x(a.cols(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    x[i * k * n + assignment.vehicle_to_resource[i]] = 1;
  }
  AddCountViolations(report, a.multiply(x), n);
  report.feasible = report.violations.empty();
  return report;
}

FeasibilityReport CheckFeasibilityDirect(const ResourceAssignment& assignment,
                                         std::size_t n, std::size_t k) {
  FeasibilityReport report;
  if (n == 0) {
    if (!assignment.vehicle_to_resource.empty()) {
      report.feasible = false;
      report.violations.push_back("assignment is not empty for n = 0");
    }
    return report;
  }
  if (k == 0) throw InvalidParameterError("feasibility check needs k >= 1");
  if (!CheckShape(report, assignment, n, k)) return report;
  // counts[0..n) per vehicle, counts[n..2n) per subframe, as rows of A x.
  std::vector<int> counts(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++counts[i];
    ++counts[n + assignment.vehicle_to_resource[i] / k];
  }
  AddCountViolations(report, counts, n);
  report.feasible = report.violations.empty();
  return report;
}

FeasibilityReport VerifyAssignmentFeasibility(const ResourceAssignment& assignment,
                                              std::size_t n, std::size_t k) {
  const double entries = 2.0 * static_cast<double>(n) * static_cast<double>(k) *
                         static_cast<double>(n) * static_cast<double>(n);
  if (n > 0 && k > 0 && entries <= static_cast<double>(kMaxMaterializedEntries)) {
    return CheckFeasibilityByMatrix(assignment, n, k);
  }
  return CheckFeasibilityDirect(assignment, n, k);
}

std::int64_t IntegerDeterminant(std::vector<std::int64_t> a, std::size_t order) {
  if (a.size() != order * order) throw DimensionError("determinant needs a square matrix");
  if (order == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev_pivot = 1;
  for (std::size_t p = 0; p + 1 < order; ++p) {
    if (a[p * order + p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < order && a[swap_row * order + p] == 0) ++swap_row;
      if (swap_row == order) return 0;
      for (std::size_t c = 0; c < order; ++c)
        std::swap(a[p * order + c], a[swap_row * order + c]);
      sign = -sign;
    }
    const std::int64_t pivot = a[p * order + p];
    for (std::size_t r = p + 1; r < order; ++r) {
      for (std::size_t c = p + 1; c < order; ++c) {
        // Bareiss: the division is exact.
        a[r * order + c] =
            (a[r * order + c] * pivot - a[r * order + p] * a[p * order + c]) /
            prev_pivot;
      }
      a[r * order + p] = 0;
    }
    prev_pivot = pivot;
  }
  return sign * a[order * order - 1];
}

bool CheckTotalUnimodularity(const BinaryConstraintMatrix& m, std::size_t max_dim) {
  if (max_dim > kMaxUnimodularityDim) {
    throw SizeLimitError("unimodularity scan limited to order " +
                         std::to_string(kMaxUnimodularityDim) + ", asked for " +
                         std::to_string(max_dim));
  }
  const std::size_t top = std::min({max_dim, m.rows(), m.cols()});
  double total = 0.0;
  for (std::size_t s = 1; s <= top; ++s) total += Binomial(m.rows(), s) * Binomial(m.cols(), s);
  if (total > kMaxSubmatrixCount) {
    throw SizeLimitError("unimodularity scan would visit " + std::to_string(total) +
                         " submatrices");
  }
  for (std::size_t s = 1; s <= top; ++s) {
    std::vector<std::size_t> rows(s);
    for (std::size_t i = 0; i < s; ++i) rows[i] = i;
    do {
      std::vector<std::size_t> cols(s);
      for (std::size_t i = 0; i < s; ++i) cols[i] = i;
      do {
        std::vector<std::int64_t> sub(s * s);
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t c = 0; c < s; ++c) sub[r * s + c] = m(rows[r], cols[c]);
        const std::int64_t det = IntegerDeterminant(std::move(sub), s);
        if (det < -1 || det > 1) return false;
      } while (NextCombination(cols, m.cols()));
    } while (NextCombination(rows, m.rows()));
  }
  return true;
}

}  // namespace sidelink
