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

// Greedy compilation of a Z-rotation into randomized ladder-state rotations.
//
// The residual is the rotation still to be applied, in radians. Each step
// picks the enabled rung whose rotation 2t is closest to |residual|, bills a
// fresh ladder climb for it, and applies +-2t with equal probability.

#include <cstdint>
#include <vector>

#include "hladder/family.h"
#include "hladder/ladder.h"
#include "hladder/rng.h"

namespace hladder {

struct SynthesisConfig {
  double epsilon = 1e-6;
  std::vector<Family> families{Family::kH};
  /// Highest rung considered; a negative value selects default_max_level(epsilon).
  int max_level = -1;
  bool free_clifford_reduction = true;
  std::uint64_t master_seed = kDefaultSeed;

  /// Throws std::invalid_argument unless epsilon > 0, max_level <= kMaxLevel
  /// and at least one family is enabled.
  void validate() const;
  int effective_max_level() const;
};

/// Smallest H rung with 2*theta_i <= epsilon/2, capped at kMaxLevel.
int default_max_level(double epsilon);

/// Wraps into (-pi, pi].
double wrap_angle(double angle);

struct RandomRotation {
  double new_residual;
  int sign;  ///< +1: residual - angle, -1: residual + angle
};

/// One use of the randomized rotation gadget: the rotation lands with either
/// orientation with probability 1/2. Result wrapped into (-pi, pi].
RandomRotation apply_random_rotation(double residual, double rotation_angle, Rng& rng);

struct CliffordReduction {
  double reduced;         ///< in (-pi/4, pi/4], congruent to the input mod pi/2
  std::int64_t s_count;   ///< powers of S applied, in [0, 3]
};

/// Strips multiples of pi/2 (powers of S) at no cost.
CliffordReduction reduce_by_clifford(double residual);

struct StateChoice {
  Family family;
  int level;
  bool operator==(const StateChoice&) const = default;
};

/// Enabled rung minimizing | |residual| - 2t |, level <= max level. Ties go to
/// the lower expected climb cost, then family order H < psi0 < psi1 < psi2,
/// then the lower level.
StateChoice pick_state(double residual, const SynthesisConfig& config);

struct AppliedRotation {
  Family family;
  int level;
  int sign;
};

struct AncillaUse {
  double angle;  ///< rotation carried by the prepared |Z(angle)> ancilla
  int sign;
};

struct SynthesisResult {
  double target = 0;
  std::vector<AppliedRotation> applied;
  /// Online uses of prepared ancillas; only filled by min_online_synthesize.
  std::vector<AncillaUse> ancilla_uses;
  double residual = 0;
  std::int64_t online_cost = 0;
  double offline_cost = 0;
  std::int64_t clifford_corrections = 0;
};

/// Runs the greedy loop until |residual| <= epsilon.
SynthesisResult synthesize(double target, const SynthesisConfig& config, Rng& rng);

/// Minimal-online variant: an ancilla |Z(r)> is synthesized offline for the
/// current residual r and used once online. On failure the residual doubles
/// and the next ancilla is prepared, so the online count is geometric(1/2).
/// Ancilla k is prepared to epsilon / 2^(k+1).
SynthesisResult min_online_synthesize(double target, const SynthesisConfig& config, Rng& rng);

/// Same-axis rotation distance sqrt((2 - |tr U V^dagger|)/2) = sqrt(1 - |cos dphi|),
/// evaluated without cancellation.
double distance_angle_to_bs12(double delta_phi);

}  // namespace hladder
