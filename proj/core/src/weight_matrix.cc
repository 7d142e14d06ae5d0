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

#include "sidelink/weight_matrix.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sidelink/errors.h"

namespace sidelink {
namespace {

void CheckEntry(double value, std::size_t row, std::size_t col) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidWeightError("weight (" + std::to_string(row) + ", " +
                             std::to_string(col) + ") = " +
                             std::to_string(value) +
                             " is not a finite non-negative rate");
  }
}

void CheckShape(std::size_t n_rows, std::size_t n_cols) {
  if (n_rows == 0 || n_cols == 0) {
    throw DimensionError("weight matrix needs at least one row and column, got " +
                         std::to_string(n_rows) + "x" + std::to_string(n_cols));
  }
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t n_rows, std::size_t n_cols,
                           double bandwidth_mhz)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      bandwidth_mhz_(bandwidth_mhz),
      data_(n_rows * n_cols, 0.0) {
  CheckShape(n_rows, n_cols);
}

WeightMatrix::WeightMatrix(std::size_t n_rows, std::size_t n_cols,
                           std::vector<double> row_major, double bandwidth_mhz)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      bandwidth_mhz_(bandwidth_mhz),
      data_(std::move(row_major)) {
  CheckShape(n_rows, n_cols);
  if (data_.size() != n_rows * n_cols) {
    throw DimensionError("expected " + std::to_string(n_rows * n_cols) +
                         " entries, got " + std::to_string(data_.size()));
  }
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (std::size_t j = 0; j < n_cols_; ++j) CheckEntry((*this)(i, j), i, j);
  }
}

WeightMatrix WeightMatrix::FromRows(const std::vector<std::vector<double>>& rows,
                                    double bandwidth_mhz) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> flat;
  flat.reserve(n_rows * n_cols);
  for (const auto& r : rows) {
    if (r.size() != n_cols) throw DimensionError("ragged rows in weight matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return WeightMatrix(n_rows, n_cols, std::move(flat), bandwidth_mhz);
}

void WeightMatrix::set(std::size_t row, std::size_t col, double value) {
  if (row >= n_rows_ || col >= n_cols_) {
    throw BoundsError("index (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") outside " +
                      std::to_string(n_rows_) + "x" + std::to_string(n_cols_));
  }
  CheckEntry(value, row, col);
  data_[row * n_cols_ + col] = value;
}

double WeightMatrix::max_entry() const {
  return *std::max_element(data_.begin(), data_.end());
}

WeightMatrix WeightMatrix::scaled(double factor) const {
  std::vector<double> out(data_);
  for (double& v : out) v *= factor;
  return WeightMatrix(n_rows_, n_cols_, std::move(out), bandwidth_mhz_);
}

}  // namespace sidelink
