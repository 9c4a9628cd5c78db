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

#include "hladder/synthesis.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hladder {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarterTurn = kPi / 2.0;
// Guards against a runaway loop from a malformed config; normal runs use < 100 steps.
constexpr std::int64_t kStepLimit = 10'000'000;

struct RungTables {
  std::array<std::array<double, kMaxLevel + 1>, 4> rotation{};
  std::array<std::array<double, kMaxLevel + 1>, 4> expected_cost{};
};

const RungTables& rung_tables() {
  static const RungTables tables = [] {
    RungTables t;
    for (Family f : kAllFamilies) {
      const auto fi = static_cast<std::size_t>(f);
      for (int l = 0; l <= kMaxLevel; ++l) {
        t.rotation[fi][static_cast<std::size_t>(l)] = rotation_angle(f, l);
        t.expected_cost[fi][static_cast<std::size_t>(l)] = expected_climb_cost(f, l);
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

void SynthesisConfig::validate() const {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
  if (max_level > kMaxLevel) throw std::invalid_argument("max_level exceeds " + std::to_string(kMaxLevel));
  if (families.empty()) throw std::invalid_argument("no resource family enabled");
}

int SynthesisConfig::effective_max_level() const { return max_level < 0 ? default_max_level(epsilon) : max_level; }

int default_max_level(double epsilon) {
  const auto& rot = rung_tables().rotation[static_cast<std::size_t>(Family::kH)];
  for (int l = 0; l <= kMaxLevel; ++l) {
    if (rot[static_cast<std::size_t>(l)] <= epsilon / 2.0) return l;
  }
  return kMaxLevel;
}

double wrap_angle(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

RandomRotation apply_random_rotation(double residual, double rotation_angle, Rng& rng) {
  if (!(rotation_angle > 0)) throw std::invalid_argument("rotation angle must be positive");
  const int sign = rng.bernoulli(0.5) ? 1 : -1;
  return {wrap_angle(residual - sign * rotation_angle), sign};
}

CliffordReduction reduce_by_clifford(double residual) {
  double reduced = std::remainder(residual, kQuarterTurn);  // [-pi/4, pi/4]
  if (reduced <= -kQuarterTurn / 2.0) reduced += kQuarterTurn;
  const auto quarter_turns = static_cast<std::int64_t>(std::llround((residual - reduced) / kQuarterTurn));
  return {reduced, ((quarter_turns % 4) + 4) % 4};
}

StateChoice pick_state(double residual, const SynthesisConfig& config) {
  const RungTables& tables = rung_tables();
  const double target = std::abs(residual);
  const int max_level = config.effective_max_level();

  std::optional<StateChoice> best;
  double best_gap = 0;
  double best_cost = 0;
  for (Family f : kAllFamilies) {
    if (std::find(config.families.begin(), config.families.end(), f) == config.families.end()) continue;
    const auto& rot = tables.rotation[static_cast<std::size_t>(f)];
    // Rotations decrease with level: the closest rung is the last one at or
    // above the target or the first one below it.
    int first_below = 0;
    while (first_below <= max_level && rot[static_cast<std::size_t>(first_below)] >= target) ++first_below;
    for (int l : {first_below - 1, first_below}) {
      if (l < 0 || l > max_level) continue;
      const double gap = std::abs(target - rot[static_cast<std::size_t>(l)]);
      const double cost = tables.expected_cost[static_cast<std::size_t>(f)][static_cast<std::size_t>(l)];
      // Families and levels are visited in increasing order, so strict
      // comparisons implement the remaining tie-breaks.
      if (!best || gap < best_gap || (gap == best_gap && cost < best_cost)) {
        best = StateChoice{f, l};
        best_gap = gap;
        best_cost = cost;
      }
    }
  }
  return *best;
}

SynthesisResult synthesize(double target, const SynthesisConfig& config, Rng& rng) {
  config.validate();
  SynthesisResult result;
  result.target = target;

  double residual = wrap_angle(target);
  auto reduce = [&] {
    if (!config.free_clifford_reduction) return;
    const CliffordReduction c = reduce_by_clifford(residual);
    if (c.s_count != 0) ++result.clifford_corrections;
    residual = c.reduced;
  };

  reduce();
  while (std::abs(residual) > config.epsilon) {
    if (result.online_cost >= kStepLimit) throw std::runtime_error("synthesis did not converge");
    const StateChoice choice = pick_state(residual, config);
    result.offline_cost += simulate_climb(choice.family, choice.level, rng).offline_cost(choice.family);
    const RandomRotation step = apply_random_rotation(residual, rotation_angle(choice.family, choice.level), rng);
    result.applied.push_back({choice.family, choice.level, step.sign});
    ++result.online_cost;
    residual = step.new_residual;
    reduce();
  }
  result.residual = residual;
  return result;
}

SynthesisResult min_online_synthesize(double target, const SynthesisConfig& config, Rng& rng) {
  config.validate();
  SynthesisResult result;
  result.target = target;

  double residual = wrap_angle(target);
  double budget = config.epsilon;
  for (;;) {
    if (config.free_clifford_reduction) {
      const CliffordReduction c = reduce_by_clifford(residual);
      if (c.s_count != 0) ++result.clifford_corrections;
      residual = c.reduced;
    }
    if (std::abs(residual) <= config.epsilon) break;
    if (result.online_cost >= kStepLimit) throw std::runtime_error("synthesis did not converge");

    budget /= 2.0;
    SynthesisConfig ancilla_config = config;
    ancilla_config.epsilon = budget;
    if (config.max_level >= 0) ancilla_config.max_level = std::max(config.max_level, default_max_level(budget));
    // The ancilla starts as |+> and is rotated offline toward |Z(residual)>.
    const SynthesisResult ancilla = synthesize(residual, ancilla_config, rng);
    result.offline_cost += ancilla.offline_cost;
    result.clifford_corrections += ancilla.clifford_corrections;
    const double carried = residual - ancilla.residual;

    const int sign = rng.bernoulli(0.5) ? 1 : -1;
    result.ancilla_uses.push_back({carried, sign});
    ++result.online_cost;
    residual = wrap_angle(residual - sign * carried);
  }
  result.residual = residual;
  return result;
}

double distance_angle_to_bs12(double delta_phi) {
  // 1 - cos x = 2 sin^2(x/2) and 1 + cos x = 2 cos^2(x/2).
  const double half = 0.5 * delta_phi;
  if (std::cos(delta_phi) >= 0) return std::numbers::sqrt2 * std::abs(std::sin(half));
  return std::numbers::sqrt2 * std::abs(std::cos(half));
}

}  // namespace hladder
