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

#ifndef SIDELINK_WEIGHTS_IO_H_
#define SIDELINK_WEIGHTS_IO_H_

#include <filesystem>
#include <string>

#include "sidelink/weight_matrix.h"

namespace sidelink {

// Comma-separated matrix, one vehicle per line, one column per resource.
// Blank lines and lines starting with '#' are skipped. Throws
// InvalidConfigError on ragged or non-numeric input and IoError when the
// file cannot be read.
WeightMatrix ParseWeightsCsv(const std::string& text,
                             double bandwidth_mhz = WeightMatrix::kDefaultBandwidthMhz);
WeightMatrix LoadWeightsCsv(const std::filesystem::path& path,
                            double bandwidth_mhz = WeightMatrix::kDefaultBandwidthMhz);

}  // namespace sidelink

#endif  // SIDELINK_WEIGHTS_IO_H_
