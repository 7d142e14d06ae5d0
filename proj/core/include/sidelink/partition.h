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

#ifndef SIDELINK_PARTITION_H_
#define SIDELINK_PARTITION_H_

#include <cstddef>

namespace sidelink {

// Grouping of K*N resources into N macro-vertices (subframes) of K resources
// each. Layout is subframe-major: subframe s owns [s*K, (s+1)*K).
class MacroPartition {
 public:
  // Throws InvalidParameterError when either count is zero.
  MacroPartition(std::size_t n_subframes, std::size_t resources_per_subframe);

  std::size_t subframes() const { return n_subframes_; }
  std::size_t per_subframe() const { return per_subframe_; }
  std::size_t resources() const { return n_subframes_ * per_subframe_; }

  std::size_t subframe_of(std::size_t resource) const {
    return resource / per_subframe_;
  }
  std::size_t block_begin(std::size_t subframe) const {
    return subframe * per_subframe_;
  }
  std::size_t block_end(std::size_t subframe) const {
    return (subframe + 1) * per_subframe_;
  }

  bool operator==(const MacroPartition&) const = default;

 private:
  std::size_t n_subframes_;
  std::size_t per_subframe_;
};

inline MacroPartition BuildPartition(std::size_t n_subframes,
                                     std::size_t resources_per_subframe) {
  return MacroPartition(n_subframes, resources_per_subframe);
}

}  // namespace sidelink

#endif  // SIDELINK_PARTITION_H_
