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

// Imperfect |H> resources pushed through the H ladder with exact two-qubit
// density-matrix evolution. Cliffords and measurements are ideal; every
// consumed |H> is an independent draw of the noisy resource.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hladder/quantum_core.h"
#include "hladder/rng.h"

namespace hladder {

enum class NoiseKind {
  kA,  ///< (1-p)|H><H| + p|-H><-H|, strength p in [0, 1]
  kB,  ///< pure, tilted by delta inside the XZ plane
  kC,  ///< pure, tilted by delta out of the XZ plane toward Y
};

std::string_view noise_kind_name(NoiseKind kind);
NoiseKind parse_noise_kind(std::string_view text);

struct NoiseModel {
  NoiseKind kind;
  double strength;
  void validate() const;
};

DensityMatrix make_noisy_resource(const NoiseModel& model);

/// Ideal rung |H_i><H_i|.
DensityMatrix ideal_rung(int level);

struct NoisyClimb {
  DensityMatrix state;
  double distance;  ///< trace distance to ideal_rung(level)
  std::int64_t steps;
};

/// Called with every intermediate walker state and every two-qubit state
/// before measurement.
using StateObserver = std::function<void(const DensityMatrix&)>;

/// One climb to `target_level` with noisy resources. Outcomes are sampled
/// from the noisy state's probabilities; the up/down label follows the
/// measured bit.
NoisyClimb propagate_to_level(const NoiseModel& model, int target_level, Rng& rng,
                              const StateObserver& observe = {});

struct DecayPoint {
  int level;
  double distance;
};

struct DecayFit {
  double prefactor;  ///< distance ~ prefactor * base^(-level)
  double base;
  int level_min;
  int level_max;
  double residual_rms;  ///< of ln(distance)
};

/// Least squares of ln(distance) on level. Needs at least 3 points and two
/// distinct levels; throws std::invalid_argument on a nonpositive distance.
DecayFit fit_exponential_decay(std::span<const DecayPoint> points);

/// Mean distance at each level in [first_level, last_level], averaging
/// `instances` independent climbs per level. Deterministic in (seed, model)
/// regardless of `jobs`.
std::vector<DecayPoint> mean_distance_profile(const NoiseModel& model, int first_level, int last_level,
                                              std::size_t instances, std::uint64_t seed, unsigned jobs = 1);

struct LevelWindow {
  int first;
  int last;
};

/// Fit window for a noise strength: [18, 28] for 1e-4, [18, 22] for 1e-6,
/// [13, 16] for 1e-8. Other strengths take the top third of levels 1..L,
/// where L is the last level at which strength * 2.3^(-L) stays above 1e-14
/// (below that the distances reach double-precision noise).
LevelWindow default_fit_window(double strength);

}  // namespace hladder
