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

#include "sidelink/partition.h"

#include <string>

#include "sidelink/errors.h"

namespace sidelink {

MacroPartition::MacroPartition(std::size_t n_subframes,
                               std::size_t resources_per_subframe)
    : n_subframes_(n_subframes), per_subframe_(resources_per_subframe) {
  if (n_subframes == 0 || resources_per_subframe == 0) {
    throw InvalidParameterError(
        "partition needs N >= 1 subframes and K >= 1 resources each, got N = " +
        std::to_string(n_subframes) + ", K = " +
        std::to_string(resources_per_subframe));
  }
}

}  // namespace sidelink
