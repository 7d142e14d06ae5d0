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

#ifndef SIDELINK_RANDOM_H_
#define SIDELINK_RANDOM_H_

#include <cstdint>
#include <random>

namespace sidelink {

// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t MixSeed(std::uint64_t x);

// Seed of substream `index` under `parent`. Streams for different indices
// do not depend on each other, so removing one leaves the rest unchanged.
std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t index);

// Draws with fixed, library-independent algorithms. std::mt19937_64 output
// is pinned by the standard; the std distributions are not, so uniform and
// normal variates are produced here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  // Uniform integer in [0, bound), unbiased. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sidelink

#endif  // SIDELINK_RANDOM_H_
