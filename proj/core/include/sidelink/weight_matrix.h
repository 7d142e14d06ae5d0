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

#ifndef SIDELINK_WEIGHT_MATRIX_H_
#define SIDELINK_WEIGHT_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace sidelink {

// Dense row-major matrix of achievable rates in Mbit/s. Rows are vehicles,
// columns are resources. Every entry is finite and non-negative; the
// constructor rejects anything else with InvalidWeightError.
class WeightMatrix {
 public:
  static constexpr double kDefaultBandwidthMhz = 1.26;

  WeightMatrix(std::size_t n_rows, std::size_t n_cols,
               double bandwidth_mhz = kDefaultBandwidthMhz);
  WeightMatrix(std::size_t n_rows, std::size_t n_cols,
               std::vector<double> row_major,
               double bandwidth_mhz = kDefaultBandwidthMhz);

  // Convenience for literals in tests and small tools.
  static WeightMatrix FromRows(const std::vector<std::vector<double>>& rows,
                               double bandwidth_mhz = kDefaultBandwidthMhz);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  bool is_square() const { return n_rows_ == n_cols_; }
  double bandwidth_mhz() const { return bandwidth_mhz_; }

  double operator()(std::size_t row, std::size_t col) const {
    return data_[row * n_cols_ + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * n_cols_, n_cols_};
  }
  std::span<const double> data() const { return data_; }

  // Bounds- and value-checked write.
  void set(std::size_t row, std::size_t col, double value);

  double max_entry() const;
  WeightMatrix scaled(double factor) const;

  bool operator==(const WeightMatrix&) const = default;

 private:
  std::size_t n_rows_;
  std::size_t n_cols_;
  double bandwidth_mhz_;
  std::vector<double> data_;
};

}  // namespace sidelink

#endif  // SIDELINK_WEIGHT_MATRIX_H_
