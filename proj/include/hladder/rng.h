// Copyright 2026 The hladder Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace hladder {

/// Seed used by every stochastic entry point when the caller does not pick one.
inline constexpr std::uint64_t kDefaultSeed = 7;

/// Seeded pseudo-random stream.
///
/// Doubles are built from the top 53 bits of the 64-bit Mersenne Twister
/// output rather than through std::uniform_real_distribution, whose algorithm
/// is implementation-defined; this keeps sample files byte-identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream for task `index` of a run seeded with `master_seed`.
  /// The result depends only on the pair, never on scheduling order.
  static Rng substream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hladder
