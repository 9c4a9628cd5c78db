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

// Ladders of non-stabilizer states built by repeatedly merging a rung with a
// fresh |H>: a parity measurement moves the rung up one level on outcome 0
// and down one level on outcome 1.

#include <cstdint>
#include <optional>

#include "hladder/family.h"
#include "hladder/rng.h"

namespace hladder {

/// Highest rung any ladder may reach; the H rung angle there is below 1e-57.
inline constexpr int kMaxLevel = 150;

/// Angle t of the rung cos(t)|0> + sin(t)|1> at `level`:
///   cot t = cot(base) * cot(pi/8)^level,
/// with base = pi/8 for the H ladder and the factory output angle otherwise.
/// Throws std::invalid_argument for negative levels.
double ladder_angle(Family family, int level);

/// The Z-rotation a rung implements, 2 * ladder_angle.
inline double rotation_angle(Family family, int level) { return 2.0 * ladder_angle(family, level); }

struct ResourceState {
  Family family;
  int level;
  double state_angle;

  /// Throws std::invalid_argument outside [0, kMaxLevel].
  static ResourceState make(Family family, int level);
};

/// Probability of outcome 0 when merging `bottom` with a fresh |H>:
///   cos^2(t) cos^2(pi/8) + sin^2(t) sin^2(pi/8).
double merge_success_prob(const ResourceState& bottom);

/// cos^2(pi/8) - merge_success_prob(bottom) = sin^2(t) cos(pi/4), evaluated
/// directly so it stays positive where the difference itself would round to 0.
double merge_success_deficit(const ResourceState& bottom);

enum class MergeOutcome { kUp, kDown };

struct MergeResult {
  MergeOutcome outcome;
  /// Empty when a level-0 rung steps down; that output is discarded.
  std::optional<ResourceState> state;
};

MergeResult merge_step(const ResourceState& bottom, Rng& rng);

struct ClimbResult {
  std::int64_t h_consumed = 0;
  std::int64_t base_states_consumed = 0;  ///< factory outputs, zero for the H ladder
  std::int64_t steps = 0;                 ///< merge attempts

  /// Cost in |H> units, billing factory states at their average cost.
  double offline_cost(Family family) const;
};

/// One walker climbing from nothing to `target_level`. A fresh base state
/// (|H> or a factory output) is billed whenever the walker is empty, every
/// merge bills one |H>, and a level-0 down step empties the walker.
ClimbResult simulate_climb(Family family, int target_level, Rng& rng);

/// Expected offline cost of simulate_climb, from first-step analysis:
///   E_l = 1 + p_l E_{l+1} + (1 - p_l) E_{l-1},  E_target = 0,
///   E_{-1} = c_base + E_0,
/// returning c_base + E_0.
double expected_climb_cost(Family family, int target_level);

}  // namespace hladder
