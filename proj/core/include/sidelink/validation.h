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

#ifndef SIDELINK_VALIDATION_H_
#define SIDELINK_VALIDATION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sidelink {

struct ValidationOptions {
  std::size_t instances = 1000;
  std::size_t max_n = 6;  // subframes per constrained instance, <= 8
  std::size_t max_k = 3;
  std::size_t max_square_n = 7;  // unconstrained instances, <= 10
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

struct ValidationResult {
  std::size_t constrained_instances = 0;
  std::size_t square_instances = 0;
  std::size_t assignments_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Random-instance self check: SolveConstrained against ExhaustiveSearch,
// SolveAssignment against BruteForceAssignment, and feasibility of every
// algorithm's output. Weights are uniform on [0, 10].
ValidationResult RunValidation(const ValidationOptions& options);

}  // namespace sidelink

#endif  // SIDELINK_VALIDATION_H_
