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

#ifndef SIDELINK_CONSTRAINT_MATRIX_H_
#define SIDELINK_CONSTRAINT_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sidelink/assignment.h"

namespace sidelink {

// Dense {0,1} matrix used to state the assignment constraints as A x = 1.
// Only meant for small sizes; the number of columns grows as K * N^2.
class BinaryConstraintMatrix {
 public:
  BinaryConstraintMatrix(std::size_t rows, std::size_t cols);

  static BinaryConstraintMatrix Identity(std::size_t n);
  static BinaryConstraintMatrix Ones(std::size_t rows, std::size_t cols);
  static BinaryConstraintMatrix FromRows(
      const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, bool value) {
    data_[r * cols_ + c] = value ? 1 : 0;
  }

  std::vector<int> column_sums() const;
  std::vector<int> row_sums() const;
  // A * x for a binary vector x of length cols().
  std::vector<int> multiply(const std::vector<std::uint8_t>& x) const;

  bool operator==(const BinaryConstraintMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> data_;
};

// Kronecker (tensor) product of two binary matrices.
BinaryConstraintMatrix Kronecker(const BinaryConstraintMatrix& a,
                                 const BinaryConstraintMatrix& b);
// [top; bottom], column counts must agree.
BinaryConstraintMatrix StackRows(const BinaryConstraintMatrix& top,
                                 const BinaryConstraintMatrix& bottom);

// [I_n (x) 1_{1xn}; 1_{1xn} (x) I_n], a 2n x n^2 matrix over the row-major
// variables x_{0,0} ... x_{n-1,n-1}. The top block makes every vehicle take
// one resource, the bottom block every resource serve one vehicle.
BinaryConstraintMatrix BuildUnconstrainedConstraintMatrix(std::size_t n);

// BuildUnconstrainedConstraintMatrix(n) (x) 1_{1xk}: 2n x k n^2. Column
// i*k*n + j is the variable "vehicle i on resource j", so the bottom block
// rows count vehicles per subframe rather than per resource.
BinaryConstraintMatrix BuildConstrainedConstraintMatrix(std::size_t n,
                                                        std::size_t k);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::string> violations;
};

// Largest 2n * k n^2 for which VerifyAssignmentFeasibility materializes the
// constraint matrix.
inline constexpr std::size_t kMaxMaterializedEntries = 10'000;

// Checks A x = 1 by building the matrix and multiplying.
FeasibilityReport CheckFeasibilityByMatrix(const ResourceAssignment& assignment,
                                           std::size_t n, std::size_t k);
// Same constraints counted directly: one resource per vehicle, each of the
// n subframes used exactly once.
FeasibilityReport CheckFeasibilityDirect(const ResourceAssignment& assignment,
                                         std::size_t n, std::size_t k);
// Dispatches to the matrix route at small sizes, the direct route otherwise.
FeasibilityReport VerifyAssignmentFeasibility(
    const ResourceAssignment& assignment, std::size_t n, std::size_t k);

// Exhaustive check that every square submatrix of order 1..max_dim has
// determinant in {-1, 0, 1}. Determinants are exact (fraction-free integer
// elimination). Throws SizeLimitError when max_dim > kMaxUnimodularityDim or
// the number of submatrices is unreasonably large.
inline constexpr std::size_t kMaxUnimodularityDim = 6;
bool CheckTotalUnimodularity(const BinaryConstraintMatrix& m,
                             std::size_t max_dim);

// Exact integer determinant of a small square matrix (Bareiss).
std::int64_t IntegerDeterminant(std::vector<std::int64_t> square,
                                std::size_t order);

}  // namespace sidelink

#endif  // SIDELINK_CONSTRAINT_MATRIX_H_
